#include "chaoskit/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include <fmt/core.h>

#include "chaoskit/errors.hpp"

namespace chaoskit {

std::string_view to_string(Regime regime) noexcept {
    switch (regime) {
        case Regime::extinction: return "extinction";
        case Regime::period_1: return "period_1";
        case Regime::period_2: return "period_2";
        case Regime::period_4: return "period_4";
        case Regime::period_8_cascade: return "period_8_cascade";
        case Regime::chaotic: return "chaotic";
        case Regime::invalid: return "invalid";
    }
    return "invalid";
}

RegimeClass classify_regime(double r) noexcept {
    RegimeClass out;
    out.r = r;
    out.boundaries_used.assign(kRegimeBoundaries.begin(), kRegimeBoundaries.end());
    if (!(r > 0.0 && r <= 4.0))
        out.label = Regime::invalid;
    else if (r <= 1.0)
        out.label = Regime::extinction;
    else if (r <= kFirstDoubling)
        out.label = Regime::period_1;
    else if (r <= kSecondDoubling)
        out.label = Regime::period_2;
    else if (r <= kThirdDoubling)
        out.label = Regime::period_4;
    else if (r <= kAccumulation)
        out.label = Regime::period_8_cascade;
    else
        out.label = Regime::chaotic;
    return out;
}

std::optional<std::size_t> regime_period(Regime regime) noexcept {
    switch (regime) {
        case Regime::extinction:
        case Regime::period_1: return 1;
        case Regime::period_2: return 2;
        case Regime::period_4: return 4;
        default: return std::nullopt;
    }
}

BifurcationDiagram sweep(double r_lo, double r_hi, std::size_t steps, std::size_t burn_in, std::size_t samples_per_r) {
    if (!(r_lo > 0.0 && r_lo <= r_hi && r_hi <= 4.0))
        throw DomainError(fmt::format("sweep range must satisfy 0 < r_lo <= r_hi <= 4, got [{}, {}]", r_lo, r_hi));
    if (steps == 0) throw DomainError("sweep needs at least one grid point");
    if (r_lo == r_hi && steps != 1) throw DomainError("a degenerate range r_lo == r_hi needs exactly one grid point");
    if (r_lo != r_hi && steps < 2) throw DomainError("a proper range needs at least two grid points");
    if (samples_per_r == 0) throw DomainError("samples_per_r must be at least 1");

    BifurcationDiagram diagram;
    diagram.burn_in = burn_in;
    diagram.samples_per_r = samples_per_r;
    diagram.r_grid.resize(steps);
    const double dr = steps > 1 ? (r_hi - r_lo) / static_cast<double>(steps - 1) : 0.0;
    for (std::size_t k = 0; k < steps; ++k) diagram.r_grid[k] = r_lo + dr * static_cast<double>(k);
    diagram.r_grid.back() = r_hi;
    diagram.attractor_samples.resize(steps);

    auto fill = [&](std::size_t first, std::size_t stride) {
        for (std::size_t k = first; k < steps; k += stride)
            diagram.attractor_samples[k] =
                orbit(MapParams::from_r(diagram.r_grid[k]), kDefaultX0, burn_in, samples_per_r).states;
    };

    const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, steps);
    if (workers == 1) {
        fill(0, 1);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(fill, w, workers);
    }
    return diagram;
}

std::pair<double, double> doubling_bracket(int index) {
    switch (index) {
        case 1: return {2.8, 3.2};
        case 2: return {3.3, 3.5};
        case 3: return {3.5, 3.56};
        default: throw DomainError(fmt::format("doubling index must be 1, 2 or 3, got {}", index));
    }
}

std::size_t doubling_burn_in(double tol) {
    constexpr double kIteratesPerUnitTol = 50.0;
    return std::max<std::size_t>(kCycleBurnIn, static_cast<std::size_t>(std::ceil(kIteratesPerUnitTol / tol)));
}

DoublingPoint locate_doubling(int index, double tol) {
    const auto [lo, hi] = doubling_bracket(index);
    return locate_doubling(index, tol, lo, hi);
}

DoublingPoint locate_doubling(int index, double tol, double bracket_lo, double bracket_hi) {
    if (index < 1 || index > 3) throw DomainError(fmt::format("doubling index must be 1, 2 or 3, got {}", index));
    if (!(tol >= 1e-6)) throw DomainError(fmt::format("tolerance must be at least 1e-6, got {}", tol));
    if (!(bracket_lo < bracket_hi))
        throw DomainError(fmt::format("bracket must satisfy lo < hi, got [{}, {}]", bracket_lo, bracket_hi));

    const std::size_t before = std::size_t{1} << (index - 1);
    const std::size_t after = before * 2;
    const std::size_t burn_in = doubling_burn_in(tol);

    auto period_at = [&](double r) {
        return detect_cycle(MapParams::from_r(r), kDefaultX0, burn_in, kCycleMaxPeriod, kCycleTolerance).period;
    };
    auto require = [&](double r, std::size_t expected, const char* where) {
        const auto p = period_at(r);
        if (p != expected)
            throw ConvergenceError(fmt::format("doubling {}: expected period {} {} at r = {:.10g}, found {}", index,
                                               expected, where, r, p ? fmt::format("{}", *p) : "aperiodic"));
    };

    double lo = bracket_lo;
    double hi = bracket_hi;
    require(lo, before, "at the lower bracket end");
    require(hi, after, "at the upper bracket end");

    for (int i = 0; i < kBisectionCap && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const auto p = period_at(mid);
        (p && *p <= before ? lo : hi) = mid;
    }
    if (hi - lo > tol) throw ConvergenceError(fmt::format("doubling {}: bracket still wider than {}", index, tol));

    const double located = 0.5 * (lo + hi);
    require(located - tol, before, "below the located point");
    require(located + tol, after, "above the located point");
    return DoublingPoint{index, located, before, after};
}

double feigenbaum_ratio(double r1, double r2, double r3) {
    if (!(r2 > r1) || !(r3 > r2))
        throw ConvergenceError(
            fmt::format("doubling points must be strictly increasing, got {}, {}, {}", r1, r2, r3));
    return (r2 - r1) / (r3 - r2);
}

double feigenbaum_estimate(double tol) {
    const double r1 = locate_doubling(1, tol).r_located;
    const double r2 = locate_doubling(2, tol).r_located;
    const double r3 = locate_doubling(3, tol).r_located;
    return feigenbaum_ratio(r1, r2, r3);
}

std::pair<double, double> period2_branch(double r) {
    if (!(r > kFirstDoubling && r <= kSecondDoubling))
        throw DomainError(fmt::format("period-2 branch is defined for r in (3, 3.4495], got {}", r));
    const double root = std::sqrt((r + 1.0) * (r - 3.0));
    return {(r + 1.0 + root) / (2.0 * r), (r + 1.0 - root) / (2.0 * r)};
}

std::optional<double> first_aperiodic(double r_lo, double r_hi, double dr, std::size_t max_period) {
    if (!(r_lo > 0.0 && r_lo <= r_hi && r_hi <= 4.0) || !(dr > 0.0))
        throw DomainError(fmt::format("scan needs 0 < r_lo <= r_hi <= 4 and dr > 0, got [{}, {}] by {}", r_lo, r_hi, dr));
    const auto n = static_cast<std::size_t>(std::floor((r_hi - r_lo) / dr + 1e-9));
    for (std::size_t k = 0; k <= n; ++k) {
        const double r = r_lo + dr * static_cast<double>(k);
        if (detect_cycle(MapParams::from_r(r), kDefaultX0, kCycleBurnIn, max_period, kCycleTolerance).aperiodic())
            return r;
    }
    return std::nullopt;
}

}  // namespace chaoskit
