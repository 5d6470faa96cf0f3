#include "chaoskit/diagnostics.hpp"

#include <cmath>

#include <fmt/core.h>

#include "chaoskit/errors.hpp"

namespace chaoskit {

namespace {

constexpr double kSuperstableGap = 1e-15;
constexpr int kThresholdIterationCap = 200;

}  // namespace

CycleInfo detect_cycle(const MapParams& params, double x0, std::size_t burn_in, std::size_t max_period, double tol) {
    if (!(x0 > 0.0 && x0 < 1.0)) throw DomainError(fmt::format("x0 must lie in (0, 1), got {}", x0));
    if (max_period == 0) throw DomainError("max_period must be at least 1");
    if (!(tol > 0.0)) throw DomainError(fmt::format("tolerance must be positive, got {}", tol));

    const double r = params.r();
    double x = x0;
    for (std::size_t i = 0; i < burn_in; ++i) x = step_unchecked(r, x);

    // 2 * max_period states are enough to compare p states against their p-th successors.
    std::vector<double> window(2 * max_period);
    for (auto& s : window) {
        s = x;
        x = step_unchecked(r, x);
    }

    CycleInfo info;
    info.tolerance_used = tol;
    for (std::size_t p = 1; p <= max_period; ++p) {
        bool closes = true;
        for (std::size_t k = 0; k < p && closes; ++k) closes = std::abs(window[k + p] - window[k]) <= tol;
        if (!closes) continue;

        info.period = p;
        info.points.assign(window.begin(), window.begin() + static_cast<std::ptrdiff_t>(p));
        double m = 1.0;
        for (double v : info.points) {
            if (std::abs(v - 0.5) <= kSuperstableGap) {
                m = 0.0;
                break;
            }
            m *= derivative(params, v);
        }
        info.multiplier = m;
        return info;
    }
    return info;
}

LyapunovEstimate lyapunov(const MapParams& params, double x0, std::size_t burn_in, std::size_t iterates) {
    if (!(x0 > 0.0 && x0 < 1.0)) throw DomainError(fmt::format("x0 must lie in (0, 1), got {}", x0));
    if (iterates == 0) throw DomainError("iterates must be at least 1");

    const double r = params.r();
    double x = x0;
    for (std::size_t i = 0; i < burn_in; ++i) x = step_unchecked(r, x);

    LyapunovEstimate est;
    double sum = 0.0;
    std::size_t used = 0;
    for (; used < iterates; ++used) {
        const double slope = std::abs(r * (1.0 - 2.0 * x));
        if (slope == 0.0) {
            est.diverged_to_minus_infinity = true;
            break;
        }
        sum += std::log(slope);
        x = step_unchecked(r, x);
    }
    est.iterates_used = used;
    est.value = used > 0 ? sum / static_cast<double>(used) : 0.0;
    return est;
}

LiYorkeCertificate liyorke_certificate(const MapParams& params) {
    const double r = params.r();
    LiYorkeCertificate cert;
    cert.r = r;
    cert.x_star = 0.5;
    cert.x_max = step_unchecked(r, cert.x_star);
    cert.f3 = step_unchecked(r, cert.x_max);
    if (r >= 2.0) {
        // (1 - s)/2 with s = sqrt(1 - 2/r), rewritten as (1/r)/(1 + s) to avoid cancellation.
        const double s = std::sqrt(1.0 - 2.0 / r);
        cert.x_i = (1.0 / r) / (1.0 + s);
    }
    cert.holds = cert.x_i.has_value() && 0.0 <= cert.f3 && cert.f3 <= *cert.x_i && *cert.x_i <= cert.x_star &&
                 cert.x_star <= cert.x_max;
    return cert;
}

double liyorke_threshold(double lo, double hi, double tol) {
    if (!(lo < hi)) throw DomainError(fmt::format("bracket must satisfy lo < hi, got [{}, {}]", lo, hi));
    if (!(tol > 0.0)) throw DomainError(fmt::format("tolerance must be positive, got {}", tol));

    auto holds = [](double r) { return liyorke_certificate(MapParams::from_r(r)).holds; };
    const bool at_lo = holds(lo);
    const bool at_hi = holds(hi);
    if (at_lo || !at_hi)
        throw BracketError(fmt::format("certificate must fail at lo and hold at hi; got {} at {}, {} at {}",
                                       at_lo ? "holds" : "fails", lo, at_hi ? "holds" : "fails", hi));

    for (int i = 0; i < kThresholdIterationCap && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        (holds(mid) ? hi : lo) = mid;
    }
    return hi;
}

}  // namespace chaoskit
