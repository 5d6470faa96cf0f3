#pragma once

// Parameter sweeps, period-doubling location and regime classification.

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "chaoskit/diagnostics.hpp"

namespace chaoskit {

enum class Regime { extinction, period_1, period_2, period_4, period_8_cascade, chaotic, invalid };

std::string_view to_string(Regime regime) noexcept;

/// Regime boundaries on r, rounded to four decimals: the first three
/// period-doubling points and the accumulation point of the cascade.
inline constexpr double kFirstDoubling = 3.0;
inline constexpr double kSecondDoubling = 3.4495;
inline constexpr double kThirdDoubling = 3.5441;
inline constexpr double kAccumulation = 3.5699;

inline constexpr std::array<double, 5> kRegimeBoundaries{1.0, kFirstDoubling, kSecondDoubling, kThirdDoubling,
                                                          kAccumulation};

struct RegimeClass {
    Regime label = Regime::invalid;
    double r = 0.0;
    std::vector<double> boundaries_used;
};

/// Total over the reals: (0,1] extinction, (1,3] period_1, (3,3.4495] period_2,
/// (3.4495,3.5441] period_4, (3.5441,3.5699] period_8_cascade, (3.5699,4]
/// chaotic, anything else (including NaN) invalid.
RegimeClass classify_regime(double r) noexcept;

/// Attractor period implied by a regime label; empty for the cascade band,
/// chaos and invalid.
std::optional<std::size_t> regime_period(Regime regime) noexcept;

inline constexpr std::size_t kSweepSteps = 2000;
inline constexpr std::size_t kSweepBurnIn = 100'000;
inline constexpr std::size_t kSweepSamples = 200;

struct BifurcationDiagram {
    std::vector<double> r_grid;
    std::vector<std::vector<double>> attractor_samples;  // one row per grid value
    std::size_t burn_in = 0;
    std::size_t samples_per_r = 0;
};

/// Uniform grid of `steps` values from r_lo to r_hi inclusive; each row holds
/// `samples_per_r` post-burn-in states started from kDefaultX0. Rows are
/// computed concurrently but always come back ordered by r.
///
/// r_lo == r_hi is accepted only together with steps == 1.
/// Throws DomainError unless 0 < r_lo <= r_hi <= 4, steps >= 1 and samples_per_r >= 1.
BifurcationDiagram sweep(double r_lo, double r_hi, std::size_t steps = kSweepSteps, std::size_t burn_in = kSweepBurnIn,
                         std::size_t samples_per_r = kSweepSamples);

struct DoublingPoint {
    int index = 0;
    double r_located = 0.0;
    std::size_t period_before = 0;
    std::size_t period_after = 0;
};

inline constexpr int kBisectionCap = 80;

/// Default search bracket for the index-th doubling (index in 1..3).
std::pair<double, double> doubling_bracket(int index);

/// Burn-in used while bisecting to `tol`. Relaxation towards the attractor slows
/// linearly as r approaches a doubling, so the burn-in scales with 1/tol.
std::size_t doubling_burn_in(double tol);

/// Bisects on the change of detected period from 2^(index-1) to 2^index and
/// returns the midpoint of the final bracket.
///
/// Throws DomainError for index outside 1..3 or tol < 1e-6, and ConvergenceError
/// when the bracket endpoints, or r_located -/+ tol, do not show periods
/// 2^(index-1) and 2^index respectively.
DoublingPoint locate_doubling(int index, double tol);
DoublingPoint locate_doubling(int index, double tol, double bracket_lo, double bracket_hi);

/// (r2 - r1) / (r3 - r2). Throws ConvergenceError if r3 <= r2 or r2 <= r1.
double feigenbaum_ratio(double r1, double r2, double r3);

/// Locates the first three doublings at `tol` and returns their ratio.
double feigenbaum_estimate(double tol = 1e-5);

/// Analytic period-2 cycle ((r+1) +/- sqrt((r+1)(r-3))) / (2r), upper point first.
/// Throws DomainError outside (3, 3.4495].
std::pair<double, double> period2_branch(double r);

/// Scans r_lo, r_lo + dr, ... up to r_hi and returns the first grid value at
/// which detect_cycle (default burn-in and tolerance, the given max_period)
/// finds no period. Empty if every grid value is periodic.
std::optional<double> first_aperiodic(double r_lo, double r_hi, double dr, std::size_t max_period = kCycleMaxPeriod);

}  // namespace chaoskit
