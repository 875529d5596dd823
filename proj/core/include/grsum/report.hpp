#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace grsum {

/// One failing parameter tuple, e.g. {{"k", 6}, {"s", 3}} with its deviation.
struct Counterexample {
    std::vector<std::pair<std::string, std::int64_t>> params;
    double deviation = 0.0;
};

/**
 * Pass/fail record for one identity over a parameter range.
 *
 * passed() holds iff max_abs_deviation <= tolerance and no counterexample was
 * recorded. Exact suites use tolerance 0. A diagnostic report records data
 * (a boundary case, a printed formula known to be off) and never gates.
 */
struct VerificationReport {
    std::string identity_id;
    std::string parameter_range;
    double max_abs_deviation = 0.0;
    double tolerance = 0.0;
    std::vector<Counterexample> counterexamples;
    std::uint64_t checks = 0;
    bool diagnostic = false;
    std::vector<std::string> notes;

    bool passed() const { return max_abs_deviation <= tolerance && counterexamples.empty(); }

    /// Folds one comparison in; records a counterexample when |deviation| > tolerance.
    void record(double deviation, std::vector<std::pair<std::string, std::int64_t>> params);
};

inline constexpr std::size_t max_recorded_counterexamples = 32;

/// {"identity", "range", "max_dev", "tol", "passed", "counterexamples", ...}
std::string to_json(const VerificationReport& report);
std::string to_json(const std::vector<VerificationReport>& reports);

/// Stable sort by identity id, so merged shards come out in a fixed order.
void sort_reports(std::vector<VerificationReport>& reports);

/// Gating result over a batch: true iff every non-diagnostic report passed.
bool all_passed(const std::vector<VerificationReport>& reports);

} // namespace grsum
