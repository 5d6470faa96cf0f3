#pragma once

// Chaos indicators for the quadratic map: attractor cycle detection, Lyapunov
// exponent estimation, and the four-point Li-Yorke sufficient condition.

#include <cstddef>
#include <optional>
#include <vector>

#include "chaoskit/map_core.hpp"

namespace chaoskit {

inline constexpr std::size_t kCycleBurnIn = 100'000;
inline constexpr std::size_t kCycleMaxPeriod = 64;
inline constexpr double kCycleTolerance = 1e-8;

inline constexpr std::size_t kLyapunovBurnIn = 10'000;
inline constexpr std::size_t kLyapunovIterates = 1'000'000;

/// Attractor found after burn-in. `period` is empty when no period up to the
/// search limit closes (reported as aperiodic).
struct CycleInfo {
    std::optional<std::size_t> period;
    std::vector<double> points;
    double multiplier = 0.0;  // product of r(1 - 2x) over the cycle points
    double tolerance_used = 0.0;

    bool aperiodic() const noexcept { return !period.has_value(); }
};

/// Smallest p <= max_period for which every one of p consecutive post-burn-in
/// states recurs within `tol` after p further steps. Because candidate periods
/// are tried in increasing order the reported period is minimal.
///
/// A cycle point within 1e-15 of the critical point 1/2 makes the cycle
/// superstable; the multiplier is then reported as exactly 0.
///
/// Throws DomainError for x0 outside (0, 1), max_period == 0 or tol <= 0.
CycleInfo detect_cycle(const MapParams& params, double x0 = kDefaultX0, std::size_t burn_in = kCycleBurnIn,
                       std::size_t max_period = kCycleMaxPeriod, double tol = kCycleTolerance);

struct LyapunovEstimate {
    double value = 0.0;  // nats per iterate
    std::size_t iterates_used = 0;
    bool diverged_to_minus_infinity = false;
};

/// Mean of ln|r(1 - 2x_t)| over `iterates` post-burn-in states.
///
/// If the orbit lands exactly on x = 1/2 the next term is -inf. The estimate then
/// stops there: `value` is the mean of the terms accumulated so far,
/// `iterates_used` counts them, and `diverged_to_minus_infinity` is set.
LyapunovEstimate lyapunov(const MapParams& params, double x0 = kDefaultX0, std::size_t burn_in = kLyapunovBurnIn,
                          std::size_t iterates = kLyapunovIterates);

/// The ordering test 0 <= f(x_max) <= x_i <= x* <= x_max, built from the
/// critical point x* = 1/2, its image x_max = f(x*) = r/4, the smaller
/// preimage x_i of x*, and f3 = f(x_max).
///
/// Errata: widely circulated statements of this test write x_max = r/2 and
/// x_i = (r - sqrt(r^2 - r)) / (2r). Neither follows from f(x) = r x (1 - x);
/// substituting x* = 1/2 gives r/4, and solving r x (1 - x) = 1/2 gives the
/// discriminant r^2 - 2r. The forms below are the ones the map forces.
struct LiYorkeCertificate {
    double r = 0.0;
    double x_star = 0.5;
    double x_max = 0.0;
    std::optional<double> x_i;  // absent when r < 2: the peak r/4 never reaches 1/2
    double f3 = 0.0;
    bool holds = false;
};

LiYorkeCertificate liyorke_certificate(const MapParams& params);

/// Bisects on r for the point where the certificate first holds. Returns the
/// upper end of the final bracket, which is always a value where it holds,
/// once the bracket is narrower than `tol`.
///
/// Throws BracketError unless the certificate fails at `lo` and holds at `hi`;
/// DomainError for lo >= hi, tol <= 0 or endpoints outside (0, 4].
double liyorke_threshold(double lo, double hi, double tol);

}  // namespace chaoskit
