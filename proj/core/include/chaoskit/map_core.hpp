#pragma once

// The quadratic innovation-accumulation map  x -> T*eps * x * (1 - x)  on [0, 1].

#include <cstddef>
#include <vector>

namespace chaoskit {

/// Start point used when a caller does not supply one: just off the critical point,
/// so the orbit neither starts on a superstable cycle nor on a preimage of 0.
inline constexpr double kDefaultX0 = 0.5 + 1e-3;

/// Absolute tolerance for comparisons against closed-form values.
inline constexpr double kAnalyticTolerance = 1e-9;

/// Validated (T, eps) pair. The control parameter r = T * eps is derived on
/// construction and cannot drift out of sync with its factors.
class MapParams {
public:
    /// Throws DomainError unless T > 0, eps in (0, 10] and T * eps in (0, 4].
    static MapParams make(double T, double epsilon);

    /// Parameters for a bare control value r; stored as T = r, eps = 1.
    static MapParams from_r(double r);

    double T() const noexcept { return T_; }
    double epsilon() const noexcept { return epsilon_; }
    double r() const noexcept { return r_; }

    friend bool operator==(const MapParams&, const MapParams&) = default;

private:
    MapParams(double T, double epsilon) noexcept : T_(T), epsilon_(epsilon), r_(T * epsilon) {}

    double T_;
    double epsilon_;
    double r_;
};

inline MapParams make_params(double T, double epsilon) { return MapParams::make(T, epsilon); }

/// One application of the map. Throws DomainError for x outside [0, 1].
double step(const MapParams& params, double x);

/// Slope r(1 - 2x) of the map at x.
double derivative(const MapParams& params, double x) noexcept;

/// A post-burn-in trajectory. states[0] is the state reached after burn_in
/// iterations from x0; each later entry is one map application further on.
struct Orbit {
    MapParams params;
    double x0;
    std::size_t burn_in;
    std::vector<double> states;
};

/// Throws DomainError unless x0 is in (0, 1) and length >= 1.
Orbit orbit(const MapParams& params, double x0, std::size_t burn_in, std::size_t length);

struct FixedPoint {
    double value;
    double multiplier;  // r(1 - 2v)
    bool stable;        // |multiplier| < 1
};

/// {0} when r <= 1, {0, 1 - 1/r} otherwise, ordered by value.
std::vector<FixedPoint> fixed_points(const MapParams& params);

/// Unchecked map application for hot loops; x must already lie in [0, 1].
/// x * (1 - x) rounds to at most 0.25, so the result never leaves [0, r/4].
inline double step_unchecked(double r, double x) noexcept { return r * (x * (1.0 - x)); }

}  // namespace chaoskit
