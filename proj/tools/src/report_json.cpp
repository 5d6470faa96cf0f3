#include "chaoskit/cli/report_json.hpp"

namespace chaoskit::cli {

using nlohmann::json;

namespace {

template <typename T>
json optional_value(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const CycleInfo& cycle) {
    json doc;
    doc["aperiodic"] = cycle.aperiodic();
    doc["period"] = optional_value(cycle.period);
    doc["points"] = cycle.points;
    doc["multiplier"] = cycle.aperiodic() ? json(nullptr) : json(cycle.multiplier);
    doc["tolerance_used"] = cycle.tolerance_used;
    return doc;
}

json to_json(const LyapunovEstimate& estimate) {
    json doc;
    doc["value"] = estimate.value;
    doc["iterates_used"] = estimate.iterates_used;
    doc["diverged_to_minus_infinity"] = estimate.diverged_to_minus_infinity;
    return doc;
}

json to_json(const LiYorkeCertificate& cert) {
    json doc;
    doc["r"] = cert.r;
    doc["x_star"] = cert.x_star;
    doc["x_max"] = cert.x_max;
    doc["x_i"] = optional_value(cert.x_i);
    doc["f3"] = cert.f3;
    doc["holds"] = cert.holds;
    return doc;
}

json to_json(const RegimeClass& regime) {
    json doc;
    doc["label"] = std::string(to_string(regime.label));
    doc["r"] = regime.r;
    doc["boundaries_used"] = regime.boundaries_used;
    return doc;
}

json to_json(const DoublingPoint& point) {
    json doc;
    doc["index"] = point.index;
    doc["r_located"] = point.r_located;
    doc["period_before"] = point.period_before;
    doc["period_after"] = point.period_after;
    return doc;
}

json to_json(const PolicyReport& report) {
    json doc;
    doc["T"] = report.T;
    doc["alpha_plus_beta"] = report.alpha_plus_beta;
    doc["n"] = report.n;
    doc["epsilon_evaluated"] = optional_value(report.epsilon_evaluated);
    doc["r"] = optional_value(report.r);
    doc["regime"] = report.regime ? to_json(*report.regime) : json(nullptr);
    doc["steady_level"] = optional_value(report.steady_level);
    doc["max_reachable_r"] = report.max_reachable_r;

    json dangerous = json::object();
    for (const auto& d : report.dangerous)
        dangerous[std::string(d.name)] = d.value ? json(*d.value) : json("unreachable");
    doc["dangerous_epsilons"] = std::move(dangerous);

    json flagged = json::array();
    for (auto name : report.flagged) flagged.push_back(std::string(name));
    doc["flagged_epsilons"] = std::move(flagged);

    doc["recommendation"] = std::string(to_string(report.recommendation));
    doc["rationale_case"] = std::string(to_string(report.rationale));
    return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace chaoskit::cli
