#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace wmcs::suite {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

enum class SuiteKind { Quick, Acceptance };

/// Runs the full criteria list. Quick mode shrinks the randomized trial
/// counts; every exact reproduction runs identically in both modes.
std::vector<CriterionResult> run_suite(SuiteKind kind, std::uint64_t seed);

/// Deterministic report body: a pure function of (kind, seed, results
/// verdicts); wall-clock timings never enter it.
nlohmann::json suite_report(SuiteKind kind, std::uint64_t seed,
                            const std::vector<CriterionResult>& results);

}  // namespace wmcs::suite
