#pragma once

#include <optional>
#include <vector>

#include "wmcs/set_order.hpp"

namespace wmcs::fp {

/// Nonempty-set-valued self-map on a finite poset.
struct Correspondence {
    std::vector<Bitset> image;

    std::size_t size() const { return image.size(); }
    void validate(const Poset& p) const;

    static Correspondence identity(const Poset& p);
    static Correspondence constant(const Poset& p, const Bitset& value);
};

/// Points whose image contains a weakly higher / lower point.
Bitset x_plus(const Poset& p, const Correspondence& f);
Bitset x_minus(const Poset& p, const Correspondence& f);

struct MonotoneClass {
    bool uws = false;
    bool lws = false;
    /// Strong set monotonicity; unset when the ground set is not a lattice,
    /// where cross-pair joins may not exist.
    std::optional<bool> ss;
    bool x_plus_nonempty = false;
    bool x_minus_nonempty = false;

    /// Nonemptiness and closedness of values are automatic on finite ground
    /// sets, so membership in the upper/lower monotone classes reduces to
    /// the monotonicity flag plus the starting-point condition.
    bool in_f_plus() const { return uws && x_plus_nonempty; }
    bool in_f_minus() const { return lws && x_minus_nonempty; }
};

MonotoneClass classify(const Poset& p, const Correspondence& f);

/// {x : x in F(x)}. When classification puts F in the upper or lower
/// monotone class, nonemptiness of the result is asserted
/// (TheoremViolation on failure).
Bitset fixed_points(const Poset& p, const Correspondence& f);

struct SelectionPolicy {
    enum class Kind { LeastIndex, GreatestIndex, MinimalPoint, MaximalPoint, Scripted };
    Kind kind = Kind::LeastIndex;
    /// For Scripted: element indices consumed one per step; must be valid
    /// candidates at use time.
    std::vector<std::size_t> script;

    static SelectionPolicy least() { return {}; }
};

enum class Direction { Up, Down };

struct IterationResult {
    std::vector<std::size_t> trace;  // starts at x0, ends at the final point
    std::optional<std::size_t> fixed_point;
    bool dead_end = false;  // no admissible next point before reaching a fixed point
};

/// Monotone iteration x_{n+1} in {y in F(x_n) : y >= x_n} (or <= downward).
/// Requires x0 in X+ (X- downward); NotInStartSetError otherwise. On
/// correspondences violating the monotone hypotheses the walk may strand;
/// the dead-end prefix is reported rather than thrown.
IterationResult iterate(const Poset& p, const Correspondence& f, std::size_t x0,
                        const SelectionPolicy& policy, Direction dir);

/// Every fixed point reachable by some admissible monotone walk from x0.
Bitset reachable_fixed_points(const Poset& p, const Correspondence& f, std::size_t x0,
                              Direction dir);

/// Constructive comparative statics: given a fixed point x* of f, walks the
/// restriction of f_new to the cone above (Upper) or below (Lower) x* and
/// returns a fixed point of f_new on that side. Upper mode requires f_new
/// upper monotone and f_new >=uws f pointwise; lower mode requires f_new
/// lower monotone and f >=lws f_new pointwise. The set-level conclusion
/// (Fp(f_new) >=uws Fp(f), resp. Fp(f) >=lws Fp(f_new)) is asserted
/// instance-wise.
enum class LiftMode { Upper, Lower };
std::size_t cs_lift(const Poset& p, const Correspondence& f, const Correspondence& f_new,
                    std::size_t x_star, LiftMode mode);

}  // namespace wmcs::fp
