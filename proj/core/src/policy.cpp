#include "chaoskit/policy.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "chaoskit/errors.hpp"

namespace chaoskit {

std::string_view to_string(Recommendation rec) noexcept {
    switch (rec) {
        case Recommendation::FIX_LABOUR_FIRST: return "FIX_LABOUR_FIRST";
        case Recommendation::INCREASE_SUPPORT: return "INCREASE_SUPPORT";
        case Recommendation::TUNE_AVOID_BIFURCATIONS: return "TUNE_AVOID_BIFURCATIONS";
    }
    return "FIX_LABOUR_FIRST";
}

std::string_view to_string(RationaleCase c) noexcept {
    switch (c) {
        case RationaleCase::lower: return "lower";
        case RationaleCase::middle: return "middle";
        case RationaleCase::upper: return "upper";
    }
    return "lower";
}

DangerousEpsilons dangerous_epsilons(double T) {
    if (!(T > 0.0)) throw DomainError(fmt::format("T must be positive, got {}", T));
    DangerousEpsilons out{{{"eps1", kFirstDoubling, {}},
                           {"eps2", kSecondDoubling, {}},
                           {"eps3", kThirdDoubling, {}},
                           {"eps_inf", kAccumulation, {}}}};
    for (auto& d : out) {
        const double eps = d.boundary / T;
        if (eps < kEpsilonSupremum) d.value = eps;
    }
    return out;
}

double max_reachable_r(double T) noexcept { return std::min(kEpsilonSupremum * T, 4.0); }

RationaleCase rationale_case(double alpha_plus_beta) noexcept {
    if (alpha_plus_beta <= kLowerCaseCeiling) return RationaleCase::lower;
    if (alpha_plus_beta <= kMiddleCaseCeiling) return RationaleCase::middle;
    return RationaleCase::upper;
}

Recommendation recommendation_for(RationaleCase c) noexcept {
    switch (c) {
        case RationaleCase::lower: return Recommendation::FIX_LABOUR_FIRST;
        case RationaleCase::middle: return Recommendation::INCREASE_SUPPORT;
        case RationaleCase::upper: return Recommendation::TUNE_AVOID_BIFURCATIONS;
    }
    return Recommendation::FIX_LABOUR_FIRST;
}

PolicyReport advise(std::optional<double> T, std::optional<double> epsilon, double alpha_plus_beta, double n) {
    const double one_plus_n = 1.0 + n;
    if (!(one_plus_n > 0.0)) throw DomainError(fmt::format("labour growth n = {} gives 1 + n <= 0", n));
    const double implied_T = alpha_plus_beta / one_plus_n;
    if (T && !(std::abs(*T - implied_T) <= 1e-6))
        throw DomainError(
            fmt::format("T = {} is inconsistent with (alpha+beta)/(1+n) = {}", *T, implied_T));

    PolicyReport report;
    report.T = T.value_or(implied_T);
    if (!(report.T > 0.0)) throw DomainError(fmt::format("firm coefficient T must be positive, got {}", report.T));
    report.alpha_plus_beta = alpha_plus_beta;
    report.n = n;
    report.max_reachable_r = max_reachable_r(report.T);
    report.dangerous = dangerous_epsilons(report.T);
    report.rationale = rationale_case(alpha_plus_beta);
    report.recommendation = recommendation_for(report.rationale);

    if (epsilon) {
        const auto params = make_params(report.T, *epsilon);
        report.epsilon_evaluated = *epsilon;
        report.r = params.r();
        report.regime = classify_regime(params.r());
        if (report.regime->label == Regime::period_1) report.steady_level = 1.0 - 1.0 / params.r();
        for (const auto& d : report.dangerous)
            if (d.value && std::abs(*d.value - *epsilon) <= kDangerFlagTolerance) report.flagged.push_back(d.name);
    }
    return report;
}

}  // namespace chaoskit
