#include "grsum/report.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace grsum {

void VerificationReport::record(double deviation, std::vector<std::pair<std::string, std::int64_t>> params) {
    ++checks;
    const double dev = std::isnan(deviation) ? INFINITY : std::fabs(deviation);
    max_abs_deviation = std::max(max_abs_deviation, dev);
    if (dev > tolerance && counterexamples.size() < max_recorded_counterexamples) {
        counterexamples.push_back({std::move(params), dev});
    }
}

namespace {

nlohmann::json as_json(const VerificationReport& r) {
    nlohmann::json ce = nlohmann::json::array();
    for (const auto& c : r.counterexamples) {
        nlohmann::json o = nlohmann::json::object();
        for (const auto& [name, value] : c.params) {
            o[name] = value;
        }
        o["dev"] = c.deviation;
        ce.push_back(std::move(o));
    }
    nlohmann::json j = {
        {"identity", r.identity_id},
        {"range", r.parameter_range},
        {"max_dev", r.max_abs_deviation},
        {"tol", r.tolerance},
        {"passed", r.passed()},
        {"counterexamples", std::move(ce)},
        {"checks", r.checks},
    };
    if (r.diagnostic) {
        j["diagnostic"] = true;
    }
    if (!r.notes.empty()) {
        j["notes"] = r.notes;
    }
    return j;
}

} // namespace

std::string to_json(const VerificationReport& report) {
    return as_json(report).dump(2);
}

std::string to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        arr.push_back(as_json(r));
    }
    return arr.dump(2);
}

void sort_reports(std::vector<VerificationReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
        return a.identity_id < b.identity_id;
    });
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const auto& r) { return r.diagnostic || r.passed(); });
}

} // namespace grsum
