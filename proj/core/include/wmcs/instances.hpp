#pragma once

#include "wmcs/constraints.hpp"
#include "wmcs/matching.hpp"
#include "wmcs/pareto.hpp"

namespace wmcs::instances {

/// Two parallel anti-diagonal ridges -(x+y-t)^2 on the unit grid.
struct RidgePair {
    Poset grid;
    choice::ObjectiveTable low;   // ridge at t
    choice::ObjectiveTable high;  // ridge at t_high
};
RidgePair ridge_pair(long long den, const Rational& t, const Rational& t_high);

/// The kinked two-agent chain profiles over {0,1/4,1/2,3/4,1} whose optimal
/// sets move weakly but not strongly.
struct KinkedPair {
    Poset chain;
    pareto::UtilityProfile low;
    pareto::UtilityProfile high;
};
KinkedPair kinked_pair();

}  // namespace wmcs::instances

namespace wmcs::matching {

/// One firm indifferent among three single-post hires; workers all prefer
/// employment. Weakly but not strongly substitutable; three stable
/// singletons and no worker-optimal one.
Economy indifferent_single_post_economy();

/// A two-division firm under a one-hire budget: containment holds, the
/// expansion axiom fails once a better in-division applicant shows up.
Economy two_division_budget_economy();

/// One firm whose tabulated choices make a pairwise-undominated allocation
/// that the pooled-offer test still rejects.
Economy alt_stability_gap_economy();

/// Choice rule cycling over three preferred pairs of six contracts:
/// containment holds while revealed non-inferiority fails.
Economy cyclic_pairs_rule_economy();

struct EconomyPair {
    Economy base;
    Economy shifted;
};

/// Base market versus the same market after one worker starts rejecting
/// every contract.
EconomyPair worker_exit_pair();

/// A dormant firm (rejects everything) versus the market where it hires.
EconomyPair firm_entry_pair();

/// A two-division firm whose hiring budget grows from one post to two.
EconomyPair budget_relaxation_pair();

/// Three doctors, two hospitals, capacities two each, a joint cap on total
/// hires.
ConstraintsMarket region_cap_market(int total_cap);

}  // namespace wmcs::matching
