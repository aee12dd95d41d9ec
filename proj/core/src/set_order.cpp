#include "wmcs/set_order.hpp"

#include <algorithm>
#include <set>

namespace wmcs::order {

bool upper_weak_dominates(const Poset& p, const Bitset& sp, const Bitset& s) {
    const std::size_t n = p.size();
    for (std::size_t x = s.first(); x < n; x = s.next(x + 1)) {
        if (!sp.intersects(p.upset(x))) return false;
    }
    return true;
}

bool lower_weak_dominates(const Poset& p, const Bitset& sp, const Bitset& s) {
    const std::size_t n = p.size();
    for (std::size_t x = sp.first(); x < n; x = sp.next(x + 1)) {
        if (!s.intersects(p.downset(x))) return false;
    }
    return true;
}

bool weak_dominates(const Poset& p, const Bitset& sp, const Bitset& s) {
    return upper_weak_dominates(p, sp, s) && lower_weak_dominates(p, sp, s);
}

bool strong_dominates(const Poset& p, const Bitset& sp, const Bitset& s) {
    const std::size_t n = p.size();
    for (std::size_t x = s.first(); x < n; x = s.next(x + 1)) {
        for (std::size_t xp = sp.first(); xp < n; xp = sp.next(xp + 1)) {
            auto j = p.join(x, xp);
            auto m = p.meet(x, xp);
            if (!j || !m) {
                throw MissingJoinError("no join/meet in ground set for '" + p.label(x) +
                                       "' and '" + p.label(xp) + "'");
            }
            if (!sp.test(*j) || !s.test(*m)) return false;
        }
    }
    return true;
}

bool set_dominates(const Poset& p, const Bitset& sp, const Bitset& s, SetOrderMode mode) {
    switch (mode) {
        case SetOrderMode::Upper: return upper_weak_dominates(p, sp, s);
        case SetOrderMode::Lower: return lower_weak_dominates(p, sp, s);
        case SetOrderMode::Weak: return weak_dominates(p, sp, s);
        case SetOrderMode::Strong: return strong_dominates(p, sp, s);
    }
    return false;
}

bool is_sublattice(const Poset& p, const Bitset& s) {
    const std::size_t n = p.size();
    for (std::size_t a = s.first(); a < n; a = s.next(a + 1)) {
        for (std::size_t b = s.next(a + 1); b < n; b = s.next(b + 1)) {
            auto j = p.join(a, b);
            auto m = p.meet(a, b);
            if (!j || !m) {
                throw MissingJoinError("ground set lacks join/meet of '" + p.label(a) + "' and '" +
                                       p.label(b) + "'");
            }
            if (!s.test(*j) || !s.test(*m)) return false;
        }
    }
    return true;
}

Bitset interval(const Poset& p, std::size_t a, std::size_t b) {
    auto m = p.meet(a, b);
    auto j = p.join(a, b);
    if (!m || !j) {
        throw MissingJoinError("interval bounds undefined for '" + p.label(a) + "' and '" +
                               p.label(b) + "'");
    }
    return closed_interval(p, *m, *j);
}

Bitset closed_interval(const Poset& p, std::size_t lo, std::size_t hi) {
    return p.upset(lo) & p.downset(hi);
}

Bitset maximal_points(const Poset& p, const Bitset& s) {
    const std::size_t n = p.size();
    Bitset out(n);
    for (std::size_t x = s.first(); x < n; x = s.next(x + 1)) {
        Bitset strictly_above = p.upset(x) & s;
        strictly_above.reset(x);
        if (strictly_above.none()) out.set(x);
    }
    return out;
}

Bitset minimal_points(const Poset& p, const Bitset& s) {
    const std::size_t n = p.size();
    Bitset out(n);
    for (std::size_t x = s.first(); x < n; x = s.next(x + 1)) {
        Bitset strictly_below = p.downset(x) & s;
        strictly_below.reset(x);
        if (strictly_below.none()) out.set(x);
    }
    return out;
}

namespace {

bool sandwich_one_direction(const Poset& p, const Bitset& inside, const Bitset& outside) {
    // every x in `outside` lying in [y,z] for y,z in `inside` must be in `inside`
    const std::size_t n = p.size();
    for (std::size_t x = outside.first(); x < n; x = outside.next(x + 1)) {
        if (inside.test(x)) continue;
        Bitset below = inside & p.downset(x);
        Bitset above = inside & p.upset(x);
        if (below.any() && above.any()) return false;
    }
    return true;
}

}  // namespace

bool sandwich_property(const Poset& p, const Bitset& sp, const Bitset& s) {
    return sandwich_one_direction(p, sp, s) && sandwich_one_direction(p, s, sp);
}

SetOrderReport ss_decompose(const Poset& p, const Bitset& sp, const Bitset& s) {
    SetOrderReport r;
    r.uws = upper_weak_dominates(p, sp, s);
    r.lws = lower_weak_dominates(p, sp, s);
    r.ws = r.uws && r.lws;
    r.union_sublattice = is_sublattice(p, sp | s);
    r.sandwich = sandwich_property(p, sp, s);
    r.ss = strong_dominates(p, sp, s);
    if (r.ws && r.union_sublattice && r.sandwich && !r.ss) {
        throw TheoremViolation("decomposition parts hold but strong order fails");
    }
    if (r.ss && sp.any() && s.any() && is_sublattice(p, sp) && is_sublattice(p, s)) {
        if (!(r.ws && r.union_sublattice && r.sandwich)) {
            throw TheoremViolation("strong order holds on sublattices but a part fails");
        }
    }
    return r;
}

bool ws_union_property(const Poset& p, const Bitset& sp, const Bitset& s, const Bitset& tp,
                       const Bitset& t) {
    if (!weak_dominates(p, sp, s)) throw HypothesisError("S' does not weak set dominate S");
    if (!weak_dominates(p, tp, t)) throw HypothesisError("T' does not weak set dominate T");
    return weak_dominates(p, sp | tp, s | t);
}

bool ss_intersection_property(const Poset& p, const Bitset& sp, const Bitset& s, const Bitset& tp,
                              const Bitset& t) {
    if (!strong_dominates(p, sp, s)) throw HypothesisError("S' does not strong set dominate S");
    if (!strong_dominates(p, tp, t)) throw HypothesisError("T' does not strong set dominate T");
    return strong_dominates(p, sp & tp, s & t);
}

bool is_weak_set_monotone_map(const Poset& dom, const Poset& cod, const ImageMap& f) {
    const std::size_t n = dom.size();
    for (std::size_t a = 0; a < n; ++a) {
        const Bitset& above = dom.upset(a);
        for (std::size_t b = above.first(); b < n; b = above.next(b + 1)) {
            if (!weak_dominates(cod, f[b], f[a])) return false;
        }
    }
    return true;
}

Bitset image_of_set(const Poset& cod, const ImageMap& f, const Bitset& s) {
    Bitset out(cod.size());
    for (std::size_t x = s.first(); x < s.size(); x = s.next(x + 1)) out |= f[x];
    return out;
}

bool image_ws_monotone(const Poset& dom, const Poset& cod, const ImageMap& f, const Bitset& sp,
                       const Bitset& s) {
    if (f.size() != dom.size()) throw SchemaError("image map size mismatch");
    if (!is_weak_set_monotone_map(dom, cod, f)) {
        throw HypothesisError("map is not weak set monotonic");
    }
    if (!weak_dominates(dom, sp, s)) throw HypothesisError("S' does not weak set dominate S");
    return weak_dominates(cod, image_of_set(cod, f, sp), image_of_set(cod, f, s));
}

std::vector<Bitset> all_sublattices(const Poset& p, bool include_empty,
                                    std::size_t max_exponent) {
    if (p.size() > max_exponent) {
        throw SizeLimitError("sublattice enumeration over " + std::to_string(p.size()) +
                             " elements");
    }
    std::vector<Bitset> out;
    for_each_subset(p.full_set(), [&](const Bitset& s) {
        if (s.none() && !include_empty) return true;
        if (is_sublattice(p, s)) out.push_back(s);
        return true;
    });
    return out;
}

std::vector<Bitset> all_subintervals(const Poset& p) {
    std::set<Bitset> seen;
    std::vector<Bitset> out;
    const std::size_t n = p.size();
    for (std::size_t a = 0; a < n; ++a) {
        const Bitset& above = p.upset(a);
        for (std::size_t b = above.first(); b < n; b = above.next(b + 1)) {
            Bitset iv = closed_interval(p, a, b);
            if (seen.insert(iv).second) out.push_back(iv);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wmcs::order
