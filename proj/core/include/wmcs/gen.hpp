#pragma once

#include "wmcs/correspondence.hpp"
#include "wmcs/matching.hpp"
#include "wmcs/pareto.hpp"
#include "wmcs/rng.hpp"

namespace wmcs::gen {

/// Random poset on up to max_n elements (random DAG closure).
Poset random_poset(Rng& rng, std::size_t max_n);

/// Random lattice with at most max_n elements (join/meet closure of a seed
/// subset of a small Boolean cube, plus chains and small grids for variety).
Poset random_lattice(Rng& rng, std::size_t max_n);

/// Uniform table with small integer values in [-bound, bound].
choice::ObjectiveTable random_table(Rng& rng, const Poset& p, int bound = 6);

/// Random profile with the given number of agents.
pareto::UtilityProfile random_profile(Rng& rng, const Poset& p, std::size_t n_agents,
                                      int bound = 6);

enum class CorrShape {
    Raw,         // independent nonempty images
    UpClosed,    // images accumulate down the order: guarantees uws
    DownClosed,  // images accumulate up the order: guarantees lws
};

/// Random nonempty-valued correspondence. UpClosed instances are upper weak
/// set monotonic by construction, DownClosed lower; Raw is unconstrained.
fp::Correspondence random_correspondence(Rng& rng, const Poset& p, CorrShape shape);

/// Random upper-monotone correspondence with nonempty X+ and at least one
/// fixed point (a planted one), plus a pointwise >=uws enlargement of it.
struct DominatingPair {
    fp::Correspondence low;
    fp::Correspondence high;
};
DominatingPair random_uws_dominating_pair(Rng& rng, const Poset& p);

/// Mirror image for descents: `high` is lower monotone with a planted fixed
/// point and dominates `low` pointwise in the lower weak order; `low` is
/// lower monotone as well, so fixed points of `high` descend into `low`.
DominatingPair random_lws_dominating_pair(Rng& rng, const Poset& p);

/// Monotone single-valued pair x -> x v c and x -> x v c' with c' >= c on a
/// lattice: both maps sit in both monotone classes and the second dominates
/// the first in the full weak order.
struct JoinShiftPair {
    fp::Correspondence low;
    fp::Correspondence high;
    std::size_t c_low;
    std::size_t c_high;
};
JoinShiftPair random_join_shift_pair(Rng& rng, const Poset& lattice);

/// Random contracts economy drawn from rule families that satisfy the
/// containment axiom and weak substitutability by construction (responsive
/// firms, budgeted multi-unit firms, single-post indifference firms,
/// partial-order workers).
matching::Economy random_economy(Rng& rng, std::size_t max_contracts);

}  // namespace wmcs::gen
