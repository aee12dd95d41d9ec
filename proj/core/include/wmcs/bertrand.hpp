#pragma once

#include "wmcs/games.hpp"

namespace wmcs::games {

/// Price-competition game on finite rational price grids. Demand is either
/// the lowest-price split rule or a per-firm table over price profiles;
/// costs are linear or tabulated over the quantities the demand can reach.
struct BertrandSpec {
    enum class Demand { PureSplit, Table };

    struct Cost {
        bool linear = true;
        Rational marginal;                                 // linear case
        std::vector<std::pair<Rational, Rational>> table;  // (quantity, cost), quantity-sorted

        Rational at(const Rational& q) const;
        static Cost linear_cost(const Rational& c) { return Cost{true, c, {}}; }
    };

    std::vector<std::vector<Rational>> grids;  // per firm, strictly ascending
    Demand demand_kind = Demand::PureSplit;
    std::vector<std::vector<Rational>> demand_table;  // per firm, profile-indexed
    std::vector<Cost> cost;

    std::size_t firms() const { return grids.size(); }
    std::size_t n_profiles() const;
    std::vector<std::size_t> profile_of(std::size_t idx) const;
    std::size_t profile_index(const std::vector<std::size_t>& p) const;

    Rational demand(std::size_t firm, const std::vector<std::size_t>& prof) const;
    Rational payoff(std::size_t firm, const std::vector<std::size_t>& prof) const;

    void validate_shape() const;
};

/// Lowest-price firms split unit demand equally; linear costs.
BertrandSpec pure_bertrand(std::vector<std::vector<Rational>> grids,
                           std::vector<Rational> marginal_costs);

struct DemandReport {
    bool own_substitutes = true;   // weakly decreasing own, increasing cross
    bool inelastic_shift = true;   // ratio condition across opponent increases
    std::string witness;
};

/// Checks the two demand axioms over all qualifying quadruples.
DemandReport validate_demand(const BertrandSpec& spec);

/// Builds the utility-rule game; throws DemandAxiomViolation when the
/// demand axioms fail and Error when a cost table is not increasing and
/// convex over the achievable quantities.
GameDef bertrand_build(const BertrandSpec& spec);

/// Best responses shift down-compatibly: B_i(p_-i) <=lws B_i(p_-i') for all
/// ordered opponent pairs.
bool bertrand_br_monotone(const BertrandSpec& spec);

/// Equilibrium-profit comparison for a firm whose marginal cost is
/// unchanged while rivals' demands become (weakly) more inelastic, demands
/// rise, and linear costs rise. Verifies the hypotheses (HypothesisError)
/// and returns whether the shifted game's profit set for `firm`
/// lws-dominates the original's.
bool bertrand_payoff_compare(const BertrandSpec& spec, const BertrandSpec& shifted,
                             std::size_t firm, std::size_t max_profiles = 1u << 20);

}  // namespace wmcs::games
