#pragma once

#include <optional>
#include <vector>

#include "wmcs/choice.hpp"

namespace wmcs::pareto {

using choice::ObjectiveTable;

/// One exact-rational utility table per agent, all over the same poset.
struct UtilityProfile {
    std::vector<ObjectiveTable> agents;

    std::size_t n_agents() const { return agents.size(); }
    void validate(const Poset& p) const;
};

/// y Pareto dominates x: weakly better for everyone, strictly for someone.
bool pareto_dominates(const UtilityProfile& u, std::size_t y, std::size_t x);

/// Pareto optimal choices: points no element of the whole ground set
/// dominates. Exact brute force.
Bitset pareto_set(const Poset& p, const UtilityProfile& u);

/// Walks the sequential-argmax chain from x to a Pareto optimal point that
/// weakly dominates it in every coordinate (strictly in one when x itself is
/// not optimal). Returns x unchanged when x is already optimal.
std::size_t dominating_chain(const Poset& p, const UtilityProfile& u, std::size_t x);

/// Fixed-point membership test: x is optimal iff x maximizes each agent's
/// utility over the set of points every other agent weakly prefers to x.
bool phi_membership(const Poset& p, const UtilityProfile& u, std::size_t x);

/// Finite sequence of nonnegative weight vectors; the last one strictly
/// positive, length at most the number of agents.
struct WeightSequence {
    std::vector<std::vector<Rational>> steps;

    void validate(std::size_t n_agents) const;
};

/// Nested argmax recursion X^t = argmax over X^{t-1} of the phi^t-weighted
/// utilitarian sum, starting from the full ground set.
Bitset sequential_weighted_max(const Poset& p, const UtilityProfile& u, const WeightSequence& w);

enum class ProfileDominance { SingleCrossing, IncreasingDifferences };

/// Componentwise dominance of profiles.
bool profile_dominates(const Poset& p, ProfileDominance kind, const UtilityProfile& v,
                       const UtilityProfile& u);

/// Every agent's table supermodular (cardinal complementarity). Lattice only.
bool supermodular_profile(const Poset& p, const UtilityProfile& u);

struct WmcsVerdict {
    bool holds = false;
    /// On failure: an element of one Pareto set with no mate in the other.
    std::optional<std::size_t> witness;
};

/// Checks pareto_set(v) >=ws pareto_set(u) after verifying the dominance
/// hypothesis of the requested kind (HypothesisError otherwise). For the
/// increasing-differences kind, supermodularity of both profiles is part of
/// the hypothesis.
WmcsVerdict pareto_wmcs_check(const Poset& p, ProfileDominance kind, const UtilityProfile& v,
                              const UtilityProfile& u);

/// Two-division investment profile on the unit grid with step 1/den:
/// division 1 targets (2a, b), division 2 targets (a, 2b), both as negated
/// squared distances. Returns the grid poset (product of two chains) and the
/// profile over it.
struct GridProfile {
    Poset grid;
    UtilityProfile profile;
};
GridProfile investment_profile(long long den, const Rational& omega_a, const Rational& omega_b);

/// The same two divisions' tables over an existing product-of-chains grid
/// whose labels are "(p,q)" rational pairs.
UtilityProfile investment_profile_on(const Poset& grid, const Rational& omega_a,
                                     const Rational& omega_b);

}  // namespace wmcs::pareto
