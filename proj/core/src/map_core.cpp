#include "chaoskit/map_core.hpp"

#include <cmath>

#include <fmt/core.h>

#include "chaoskit/errors.hpp"

namespace chaoskit {

MapParams MapParams::make(double T, double epsilon) {
    if (!(T > 0.0) || !std::isfinite(T))
        throw DomainError(fmt::format("T must be a positive finite number, got {}", T));
    if (!(epsilon > 0.0 && epsilon <= 10.0))
        throw DomainError(fmt::format("epsilon must lie in (0, 10], got {}", epsilon));
    const double r = T * epsilon;
    if (!(r > 0.0 && r <= 4.0))
        throw DomainError(fmt::format("r = T*epsilon must lie in (0, 4], got {}", r));
    return MapParams(T, epsilon);
}

MapParams MapParams::from_r(double r) { return make(r, 1.0); }

double step(const MapParams& params, double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainError(fmt::format("state must lie in [0, 1], got {}", x));
    return step_unchecked(params.r(), x);
}

double derivative(const MapParams& params, double x) noexcept { return params.r() * (1.0 - 2.0 * x); }

Orbit orbit(const MapParams& params, double x0, std::size_t burn_in, std::size_t length) {
    if (!(x0 > 0.0 && x0 < 1.0))
        throw DomainError(fmt::format("x0 must lie in (0, 1), got {}", x0));
    if (length == 0) throw DomainError("orbit length must be at least 1");

    const double r = params.r();
    double x = x0;
    for (std::size_t i = 0; i < burn_in; ++i) x = step_unchecked(r, x);

    Orbit out{params, x0, burn_in, {}};
    out.states.reserve(length);
    out.states.push_back(x);
    for (std::size_t i = 1; i < length; ++i) {
        x = step_unchecked(r, x);
        out.states.push_back(x);
    }
    return out;
}

std::vector<FixedPoint> fixed_points(const MapParams& params) {
    const double r = params.r();
    auto tag = [&](double v) {
        const double m = derivative(params, v);
        return FixedPoint{v, m, std::abs(m) < 1.0};
    };
    std::vector<FixedPoint> out{tag(0.0)};
    if (r > 1.0) out.push_back(tag(1.0 - 1.0 / r));
    return out;
}

}  // namespace chaoskit
