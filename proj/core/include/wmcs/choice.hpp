#pragma once

#include <optional>
#include <vector>

#include "wmcs/rational.hpp"
#include "wmcs/set_order.hpp"

namespace wmcs::choice {

/// Exact-rational objective over a poset's elements, indexed by element.
/// Strict-inequality branches of dominance conditions are meaningful only
/// because ties are exact here, never floating-point accidents.
using ObjectiveTable = std::vector<Rational>;

/// Maximizer set of f over nonempty S. Throws EmptyDomainError on empty S.
Bitset argmax(const Poset& p, const Bitset& s, const ObjectiveTable& f);

/// Ordinal complementarity: f(x'') >= (>) f(x'^x'') implies
/// f(x'vx'') >= (>) f(x') for all pairs. Requires a lattice.
bool quasi_supermodular(const Poset& p, const ObjectiveTable& f);

/// Interval-qualified variant: the hypothesis additionally requires x' to
/// maximize f on [x'^x'', x'].
bool i_quasi_supermodular(const Poset& p, const ObjectiveTable& f);

enum class DominanceKind {
    SingleCrossing,  // on comparable pairs: sign of the increment carries over
    MS,              // single crossing plus quasi-supermodularity of both tables
    Weak,            // max-form relaxation characterizing ws maximizer shifts on sublattices
    WeakInterval,    // interval-qualified form characterizing ws shifts on subintervals
    Interval,        // interval-qualified form characterizing ss shifts on subintervals
    QSInterval,      // totally-ordered-pair form of interval dominance
};

/// Whether v dominates u in the given sense. Kinds that take joins or meets
/// of incomparable pairs require a lattice (NotLatticeError).
bool dominates(const Poset& p, DominanceKind kind, const ObjectiveTable& v,
               const ObjectiveTable& u);

enum class DomainFamily { Sublattices, Subintervals };

struct MaximizerWitness {
    Bitset domain;
    Bitset max_u;
    Bitset max_v;
};

/// Searches the family for a domain S where argmax(v) fails to dominate
/// argmax(u) in the requested order. Sublattices are enumerated exhaustively
/// up to `exhaustive_limit` elements; beyond that only the four-point sets
/// {x',x'',x'^x'',x'vx''} are scanned, which suffice as necessity witnesses.
/// Subintervals are always enumerated exhaustively. Stops with
/// BudgetExceeded after `budget` domains.
std::optional<MaximizerWitness> wmcs_witness_search(const Poset& p, const ObjectiveTable& v,
                                                    const ObjectiveTable& u, DomainFamily family,
                                                    order::SetOrderMode mode,
                                                    std::size_t budget = 1u << 22,
                                                    std::size_t exhaustive_limit = 12);

}  // namespace wmcs::choice
