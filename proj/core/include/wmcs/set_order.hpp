#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "wmcs/poset.hpp"

namespace wmcs::order {

enum class SetOrderMode { Upper, Lower, Weak, Strong };

/// S' >=uws S: every element of S has a weakly larger mate in S'.
bool upper_weak_dominates(const Poset& p, const Bitset& sp, const Bitset& s);
/// S' >=lws S: every element of S' has a weakly smaller mate in S.
bool lower_weak_dominates(const Poset& p, const Bitset& sp, const Bitset& s);
bool weak_dominates(const Poset& p, const Bitset& sp, const Bitset& s);

/// S' >=ss S: for every cross pair the join lands in S' and the meet in S.
/// Vacuously true if either set is empty. Throws MissingJoinError if a
/// needed join or meet does not exist in the ground set.
bool strong_dominates(const Poset& p, const Bitset& sp, const Bitset& s);

bool set_dominates(const Poset& p, const Bitset& sp, const Bitset& s, SetOrderMode mode);

/// Closure of S under pairwise joins and meets taken in the ground set.
/// Throws MissingJoinError when the ground set lacks a needed bound.
bool is_sublattice(const Poset& p, const Bitset& s);

/// Smallest subinterval containing a and b: {x : a^b <= x <= avb}. Requires
/// both bounds to exist in the ground set (MissingJoinError otherwise).
Bitset interval(const Poset& p, std::size_t a, std::size_t b);

/// The order interval [lo,hi] = {x : lo <= x <= hi}; empty when lo !<= hi.
Bitset closed_interval(const Poset& p, std::size_t lo, std::size_t hi);

Bitset maximal_points(const Poset& p, const Bitset& s);
Bitset minimal_points(const Poset& p, const Bitset& s);

/// A point of one set sandwiched between two points of the other belongs to
/// the other.
bool sandwich_property(const Poset& p, const Bitset& sp, const Bitset& s);

struct SetOrderReport {
    bool uws = false;
    bool lws = false;
    bool ws = false;
    bool ss = false;
    bool union_sublattice = false;
    bool sandwich = false;
};

/// Evaluates the strong order and its three-part decomposition
/// (weak order + union closure + sandwich). The decomposition identity is
/// asserted internally: the three parts always imply ss, and on nonempty
/// sublattices ss implies them back.
SetOrderReport ss_decompose(const Poset& p, const Bitset& sp, const Bitset& s);

/// Weak set order is closed under unions: hypotheses sp >=ws s and tp >=ws t
/// are verified (HypothesisError otherwise); returns whether
/// (sp u tp) >=ws (s u t).
bool ws_union_property(const Poset& p, const Bitset& sp, const Bitset& s, const Bitset& tp,
                       const Bitset& t);

/// Strong set order is closed under intersections, same contract.
bool ss_intersection_property(const Poset& p, const Bitset& sp, const Bitset& s, const Bitset& tp,
                              const Bitset& t);

/// A correspondence between two posets as plain per-element image data.
using ImageMap = std::vector<Bitset>;

bool is_weak_set_monotone_map(const Poset& dom, const Poset& cod, const ImageMap& f);

Bitset image_of_set(const Poset& cod, const ImageMap& f, const Bitset& s);

/// A weak set monotone map carries ws-ordered sets to ws-ordered images.
/// Hypotheses (map monotone, sp >=ws s) are verified; returns whether
/// f(sp) >=ws f(s).
bool image_ws_monotone(const Poset& dom, const Poset& cod, const ImageMap& f, const Bitset& sp,
                       const Bitset& s);

/// All sublattices of p (nonempty unless include_empty). Intended for small
/// ground sets; throws SizeLimitError beyond 2^max_exponent subsets.
std::vector<Bitset> all_sublattices(const Poset& p, bool include_empty = false,
                                    std::size_t max_exponent = 20);

/// All nonempty subintervals [a,b], a <= b, deduplicated, canonical order.
std::vector<Bitset> all_subintervals(const Poset& p);

}  // namespace wmcs::order
