#pragma once

// Regulation-parameter advice: where eps pushes r = T*eps across a regime
// boundary, and which of three rules applies to a given (alpha+beta, n).

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "chaoskit/bifurcation.hpp"

namespace chaoskit {

/// Case thresholds on alpha + beta. A value equal to a threshold belongs to the lower case.
inline constexpr double kLowerCaseCeiling = 0.1494;
inline constexpr double kMiddleCaseCeiling = 0.2754;

/// eps values at or above this are outside the regulation parameter's domain.
inline constexpr double kEpsilonSupremum = 10.0;

/// Distance within which an evaluated eps is reported as sitting on a dangerous value.
inline constexpr double kDangerFlagTolerance = 1e-3;

enum class Recommendation { FIX_LABOUR_FIRST, INCREASE_SUPPORT, TUNE_AVOID_BIFURCATIONS };
enum class RationaleCase { lower, middle, upper };

std::string_view to_string(Recommendation rec) noexcept;
std::string_view to_string(RationaleCase c) noexcept;

struct DangerousEpsilon {
    std::string_view name;        // eps1, eps2, eps3, eps_inf
    double boundary = 0.0;        // r at which the regime changes
    std::optional<double> value;  // boundary / T, empty when unreachable (>= 10)
};

using DangerousEpsilons = std::array<DangerousEpsilon, 4>;

/// boundary / T for r in {3, 3.4495, 3.5441, 3.5699}. Throws DomainError unless T > 0.
DangerousEpsilons dangerous_epsilons(double T);

/// min(10 T, 4): the largest r any admissible eps can produce.
double max_reachable_r(double T) noexcept;

RationaleCase rationale_case(double alpha_plus_beta) noexcept;
Recommendation recommendation_for(RationaleCase c) noexcept;

struct PolicyReport {
    double T = 0.0;
    double alpha_plus_beta = 0.0;
    double n = 0.0;
    std::optional<double> epsilon_evaluated;
    std::optional<double> r;
    std::optional<RegimeClass> regime;
    std::optional<double> steady_level;  // 1 - 1/r, only in the period-1 regime
    double max_reachable_r = 0.0;
    DangerousEpsilons dangerous;
    std::vector<std::string_view> flagged;  // dangerous eps within kDangerFlagTolerance of the evaluated eps
    Recommendation recommendation = Recommendation::FIX_LABOUR_FIRST;
    RationaleCase rationale = RationaleCase::lower;
};

/// Builds a report from (alpha+beta, n) and, optionally, a caller-supplied T and
/// an eps to evaluate. T defaults to (alpha+beta)/(1+n).
///
/// Throws DomainError when 1 + n <= 0, when a supplied T differs from
/// (alpha+beta)/(1+n) by more than 1e-6, when the implied T is not positive, or
/// when (T, eps) is not a valid parameter pair.
PolicyReport advise(std::optional<double> T, std::optional<double> epsilon, double alpha_plus_beta, double n);

}  // namespace chaoskit
