#include "wmcs/correspondence.hpp"

#include <algorithm>

namespace wmcs::fp {

void Correspondence::validate(const Poset& p) const {
    if (image.size() != p.size()) throw SchemaError("correspondence size mismatch");
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (image[i].none()) {
            throw SchemaError("correspondence image empty at '" + p.label(i) + "'");
        }
        if (image[i].size() != p.size()) throw SchemaError("correspondence image size mismatch");
    }
}

Correspondence Correspondence::identity(const Poset& p) {
    Correspondence f;
    f.image.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) f.image.push_back(Bitset::single(p.size(), i));
    return f;
}

Correspondence Correspondence::constant(const Poset& p, const Bitset& value) {
    Correspondence f;
    f.image.assign(p.size(), value);
    return f;
}

Bitset x_plus(const Poset& p, const Correspondence& f) {
    Bitset out(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (f.image[x].intersects(p.upset(x))) out.set(x);
    }
    return out;
}

Bitset x_minus(const Poset& p, const Correspondence& f) {
    Bitset out(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (f.image[x].intersects(p.downset(x))) out.set(x);
    }
    return out;
}

MonotoneClass classify(const Poset& p, const Correspondence& f) {
    f.validate(p);
    MonotoneClass c;
    c.uws = true;
    c.lws = true;
    const std::size_t n = p.size();
    for (std::size_t a = 0; a < n; ++a) {
        const Bitset& above = p.upset(a);
        for (std::size_t b = above.first(); b < n; b = above.next(b + 1)) {
            if (b == a) continue;
            c.uws = c.uws && order::upper_weak_dominates(p, f.image[b], f.image[a]);
            c.lws = c.lws && order::lower_weak_dominates(p, f.image[b], f.image[a]);
            if (!c.uws && !c.lws) break;
        }
    }
    if (p.is_lattice()) {
        bool ss = true;
        for (std::size_t a = 0; a < n && ss; ++a) {
            const Bitset& above = p.upset(a);
            for (std::size_t b = above.first(); b < n && ss; b = above.next(b + 1)) {
                if (b == a) continue;
                ss = order::strong_dominates(p, f.image[b], f.image[a]);
            }
        }
        c.ss = ss;
    }
    c.x_plus_nonempty = x_plus(p, f).any();
    c.x_minus_nonempty = x_minus(p, f).any();
    return c;
}

Bitset fixed_points(const Poset& p, const Correspondence& f) {
    f.validate(p);
    Bitset out(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (f.image[x].test(x)) out.set(x);
    }
    if (out.none()) {
        MonotoneClass c = classify(p, f);
        if (c.in_f_plus() || c.in_f_minus()) {
            throw TheoremViolation("monotone correspondence with empty fixed-point set");
        }
    }
    return out;
}

namespace {

std::optional<std::size_t> select(const Poset& p, const Bitset& candidates,
                                  const SelectionPolicy& policy, std::size_t step) {
    if (candidates.none()) return std::nullopt;
    switch (policy.kind) {
        case SelectionPolicy::Kind::LeastIndex: return candidates.first();
        case SelectionPolicy::Kind::GreatestIndex: {
            std::size_t last = candidates.size();
            for (std::size_t i = candidates.first(); i < candidates.size();
                 i = candidates.next(i + 1)) {
                last = i;
            }
            return last;
        }
        case SelectionPolicy::Kind::MinimalPoint:
            return order::minimal_points(p, candidates).first();
        case SelectionPolicy::Kind::MaximalPoint:
            return order::maximal_points(p, candidates).first();
        case SelectionPolicy::Kind::Scripted: {
            if (step >= policy.script.size()) {
                throw SchemaError("selection script exhausted at step " + std::to_string(step));
            }
            std::size_t pick = policy.script[step];
            if (!candidates.test(pick)) {
                throw SchemaError("scripted selection is not an admissible candidate");
            }
            return pick;
        }
    }
    return std::nullopt;
}

}  // namespace

IterationResult iterate(const Poset& p, const Correspondence& f, std::size_t x0,
                        const SelectionPolicy& policy, Direction dir) {
    f.validate(p);
    const Bitset start_set = dir == Direction::Up ? x_plus(p, f) : x_minus(p, f);
    if (!start_set.test(x0)) {
        throw NotInStartSetError("iteration start '" + p.label(x0) +
                                 (dir == Direction::Up ? "' is not in X+" : "' is not in X-"));
    }
    IterationResult res;
    std::size_t cur = x0;
    std::size_t step = 0;
    res.trace.push_back(cur);
    for (;;) {
        if (f.image[cur].test(cur)) {
            res.fixed_point = cur;
            return res;
        }
        const Bitset& cone = dir == Direction::Up ? p.upset(cur) : p.downset(cur);
        Bitset candidates = f.image[cur] & cone;
        auto next = select(p, candidates, policy, step++);
        if (!next) {
            res.dead_end = true;  // hypotheses violated upstream; report the prefix
            return res;
        }
        cur = *next;
        res.trace.push_back(cur);
    }
}

Bitset reachable_fixed_points(const Poset& p, const Correspondence& f, std::size_t x0,
                              Direction dir) {
    f.validate(p);
    Bitset visited(p.size());
    Bitset reached(p.size());
    std::vector<std::size_t> stack{x0};
    visited.set(x0);
    while (!stack.empty()) {
        std::size_t cur = stack.back();
        stack.pop_back();
        if (f.image[cur].test(cur)) reached.set(cur);
        const Bitset& cone = dir == Direction::Up ? p.upset(cur) : p.downset(cur);
        Bitset candidates = f.image[cur] & cone;
        candidates.reset(cur);
        for (std::size_t y = candidates.first(); y < p.size(); y = candidates.next(y + 1)) {
            if (!visited.test(y)) {
                visited.set(y);
                stack.push_back(y);
            }
        }
    }
    return reached;
}

std::size_t cs_lift(const Poset& p, const Correspondence& f, const Correspondence& f_new,
                    std::size_t x_star, LiftMode mode) {
    f.validate(p);
    f_new.validate(p);
    if (!f.image[x_star].test(x_star)) {
        throw HypothesisError("lift base point is not a fixed point of the original map");
    }
    const bool up = mode == LiftMode::Upper;
    MonotoneClass c = classify(p, f_new);
    if (up && !c.uws) throw HypothesisError("shifted map is not upper weak set monotonic");
    if (!up && !c.lws) throw HypothesisError("shifted map is not lower weak set monotonic");
    if (up ? !c.in_f_plus() : !c.in_f_minus()) {
        throw HypothesisError("shifted map is outside the required monotone class");
    }
    // Upper mode lifts through a map shifted up (f_new >=uws f); lower mode
    // descends through a map shifted down (f >=lws f_new).
    for (std::size_t x = 0; x < p.size(); ++x) {
        bool ordered = up ? order::upper_weak_dominates(p, f_new.image[x], f.image[x])
                          : order::lower_weak_dominates(p, f.image[x], f_new.image[x]);
        if (!ordered) {
            throw HypothesisError("maps are not pointwise ordered as required at '" +
                                  p.label(x) + "'");
        }
    }

    // Walk the restriction of the shifted map to the cone above (below) the
    // base point; monotonicity keeps the walk alive until a fixed point.
    const Bitset cone = up ? p.upset(x_star) : p.downset(x_star);
    std::size_t cur = x_star;
    for (;;) {
        if (f_new.image[cur].test(cur)) break;
        Bitset candidates = f_new.image[cur] & cone & (up ? p.upset(cur) : p.downset(cur));
        if (candidates.none()) {
            throw TheoremViolation("restricted walk stranded despite verified hypotheses");
        }
        cur = candidates.first();
    }

    // Instance-level check of the set comparison.
    const Bitset fp_old = fixed_points(p, f);
    const Bitset fp_new = fixed_points(p, f_new);
    const bool ok = up ? order::upper_weak_dominates(p, fp_new, fp_old)
                       : order::lower_weak_dominates(p, fp_old, fp_new);
    if (!ok) {
        throw TheoremViolation("fixed-point sets fail the promised half order");
    }
    return cur;
}

}  // namespace wmcs::fp
