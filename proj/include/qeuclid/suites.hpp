// Property-suite runner behind `qeuclid verify`.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qeuclid/json_io.hpp"

namespace qe {

struct SuiteConfig {
    std::string q_text = "11/10";  // as given on the command line
    double q0 = 1.1;               // numeric value of q_text
    int N = 3;                     // position truncation order
    int K = 3;                     // time / propagator truncation order
    std::uint64_t seed = 1;
    int cases = 0;                 // random cases per check; 0 keeps each check's default
    std::optional<std::string> only_check;  // run a single check
    std::optional<int> only_case;           // run a single case of it

    bool classical() const { return q0 == 1.0; }
    // Throws std::invalid_argument for q0 <= 0, N < 1, K < 0 or cases < 0.
    void validate() const;
};

// Parses "11/10", "1.1" or "2". Returns the numeric value; throws on junk.
double parse_q(const std::string& text);

struct CaseFailure {
    int case_index = 0;
    std::string input;   // minimal description of the failing input
    std::string detail;  // what went wrong
    std::string repro;   // standalone command reproducing this case
};

struct CheckResult {
    std::string suite;  // module suite the check belongs to
    std::string name;
    int cases = 0;
    bool skipped = false;
    std::string skip_reason;
    std::vector<CaseFailure> failures;
};

struct SuiteReport {
    std::string suite;
    SuiteConfig config;
    std::vector<CheckResult> checks;
    Json heine;          // per-k diagnostic rows; null unless the schrodinger suite ran
    double wall_seconds = 0.0;

    int case_count() const;
    int failure_count() const;
    bool ok() const { return failure_count() == 0; }
    // Deterministic: sorted keys, no timing. include_timing adds wall_seconds.
    Json to_json(bool include_timing = false) const;
};

const std::vector<std::string>& suite_names();  // module suites plus "all"
std::vector<std::string> check_names(const std::string& suite);
// Throws std::invalid_argument for an unknown suite or check, or a bad config.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace qe
