#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wmcs/poset.hpp"

namespace wmcs::scenario {

using json = nlohmann::json;

struct Verdict {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    json results;                   // informational values, kind-specific
    std::vector<Verdict> verdicts;  // asserted expectations and checks
    json scenario_meta;             // hash, kind, seed, caps

    bool all_pass() const;
    json to_json() const;  // deterministic given (scenario bytes, seed)
    /// csv name -> csv content; emitted next to report.json when requested
    std::vector<std::pair<std::string, std::string>> tables;
};

/// Runs one scenario document. Kinds: order, choice, pareto, fixedpoint,
/// game, matching, constraints. Expectations live under "expect" as a map
/// from JSON pointer into the results document to the expected value.
/// Throws SchemaError on malformed input; domain errors
/// (SizeLimitError, HypothesisError) propagate.
Report run_scenario(const json& scenario);

Report run_scenario_text(const std::string& bytes);

/// Poset literal shared by several scenario kinds.
Poset parse_poset(const json& spec);

}  // namespace wmcs::scenario
