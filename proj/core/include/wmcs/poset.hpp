#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wmcs/bitset.hpp"
#include "wmcs/errors.hpp"

namespace wmcs {

/// Capacity guard for poset construction. Full order matrices are quadratic
/// in the element count, so construction refuses anything beyond the cap.
/// The WMCS_MAX_ELEMENTS environment variable (read by the CLI) and explicit
/// arguments both override it.
inline constexpr std::size_t kDefaultMaxElements = 4096;

/// An explicit finite partially ordered set. The order relation is stored as
/// closed up-sets and down-sets per element, so comparisons are O(1) and set
/// sweeps are word-parallel. Element indices are stable: every other module
/// refers to elements by index into this poset.
class Poset {
  public:
    /// Builds the reflexive-transitive closure of the given `a <= b` facts.
    /// Throws CycleError if the closure is not antisymmetric and
    /// DuplicateLabelError on repeated labels.
    static Poset from_relation(std::vector<std::string> labels,
                               const std::vector<std::pair<std::string, std::string>>& pairs,
                               std::size_t max_elements = kDefaultMaxElements);

    /// Total order in the given label order (first label is the bottom).
    static Poset chain(std::vector<std::string> labels);

    static Poset antichain(std::vector<std::string> labels);

    /// Cartesian product with the componentwise order; labels are "(a,b)".
    static Poset product(const Poset& p, const Poset& q,
                         std::size_t max_elements = kDefaultMaxElements);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> index_of(const std::string& label) const;

    bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
    bool lt(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
    bool geq(std::size_t a, std::size_t b) const { return leq(b, a); }
    bool gt(std::size_t a, std::size_t b) const { return lt(b, a); }
    bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

    /// {x : a <= x} and {x : x <= a}, closed (include a itself).
    const Bitset& upset(std::size_t a) const { return up_[a]; }
    const Bitset& downset(std::size_t a) const { return down_[a]; }

    /// Least upper bound within the ground set, if it exists and is unique.
    std::optional<std::size_t> join(std::size_t a, std::size_t b) const;
    std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;

    bool is_lattice() const;

    std::optional<std::size_t> top() const;
    std::optional<std::size_t> bottom() const;

    /// Same elements with the order reversed.
    Poset dual() const;

    Bitset empty_set() const { return Bitset(size()); }
    Bitset full_set() const { return Bitset::full(size()); }
    Bitset subset_of(const std::vector<std::string>& labels) const;

  private:
    Poset() = default;
    void finalize();  // derives down_ from up_, validates order axioms

    std::vector<std::string> labels_;
    std::vector<Bitset> up_;
    std::vector<Bitset> down_;
    mutable std::optional<bool> lattice_;
};

/// Convenience: chain poset whose labels are the rational grid
/// {0, 1/den, 2/den, ..., 1}.
Poset unit_grid_chain(long long den);

}  // namespace wmcs
