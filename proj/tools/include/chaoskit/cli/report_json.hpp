#pragma once

// JSON documents written by the command-line tool. Object keys come out in
// byte order, so identical inputs serialize to identical text.

#include <json.hpp>

#include "chaoskit/bifurcation.hpp"
#include "chaoskit/diagnostics.hpp"
#include "chaoskit/policy.hpp"

namespace chaoskit::cli {

nlohmann::json to_json(const CycleInfo& cycle);
nlohmann::json to_json(const LyapunovEstimate& estimate);
nlohmann::json to_json(const LiYorkeCertificate& cert);
nlohmann::json to_json(const RegimeClass& regime);
nlohmann::json to_json(const DoublingPoint& point);

/// Schema (keys sorted):
///   T, alpha_plus_beta, dangerous_epsilons{eps1,eps2,eps3,eps_inf: number | "unreachable"},
///   epsilon_evaluated, flagged_epsilons[], max_reachable_r, n, r, rationale_case,
///   recommendation, regime{boundaries_used,label,r}, steady_level.
/// Absent optionals serialize as null.
nlohmann::json to_json(const PolicyReport& report);

/// Pretty-printed with a trailing newline.
std::string dump(const nlohmann::json& doc);

}  // namespace chaoskit::cli
