#include "wmcs/choice.hpp"

namespace wmcs::choice {

namespace {

void require_lattice(const Poset& p) {
    if (!p.is_lattice()) throw NotLatticeError("operation requires a lattice ground set");
}

Rational max_over(const ObjectiveTable& f, const Bitset& s) {
    std::size_t i = s.first();
    Rational best = f[i];
    for (i = s.next(i + 1); i < s.size(); i = s.next(i + 1)) {
        if (f[i] > best) best = f[i];
    }
    return best;
}

bool single_crossing(const Poset& p, const ObjectiveTable& v, const ObjectiveTable& u) {
    const std::size_t n = p.size();
    for (std::size_t lo = 0; lo < n; ++lo) {
        const Bitset& above = p.upset(lo);
        for (std::size_t hi = above.first(); hi < n; hi = above.next(hi + 1)) {
            if (hi == lo) continue;
            if (u[hi] >= u[lo] && !(v[hi] >= v[lo])) return false;
            if (u[hi] > u[lo] && !(v[hi] > v[lo])) return false;
        }
    }
    return true;
}

bool weak_dominance(const Poset& p, const ObjectiveTable& v, const ObjectiveTable& u) {
    require_lattice(p);
    const std::size_t n = p.size();
    for (std::size_t xp = 0; xp < n; ++xp) {
        for (std::size_t xpp = 0; xpp < n; ++xpp) {
            if (p.leq(xpp, xp)) continue;
            const std::size_t m = *p.meet(xp, xpp);
            const std::size_t j = *p.join(xp, xpp);
            const Rational hyp = Rational::max(u[m], u[xp]);
            const Rational con = Rational::max(v[xpp], v[j]);
            if (u[xpp] >= hyp && !(con >= v[xp])) return false;
            if (u[xpp] > hyp && !(con > v[xp])) return false;
        }
    }
    return true;
}

// Shared scan for the interval-qualified dominances. The qualifying pairs
// are those where x'' maximizes u and x' maximizes v over J(x',x'').
template <typename Check>
bool interval_qualified_scan(const Poset& p, const ObjectiveTable& v, const ObjectiveTable& u,
                             Check&& check) {
    require_lattice(p);
    const std::size_t n = p.size();
    for (std::size_t xp = 0; xp < n; ++xp) {
        for (std::size_t xpp = 0; xpp < n; ++xpp) {
            if (p.leq(xpp, xp)) continue;
            const std::size_t m = *p.meet(xp, xpp);
            const std::size_t j = *p.join(xp, xpp);
            const Bitset box = order::closed_interval(p, m, j);
            if (u[xpp] < max_over(u, box) || v[xp] < max_over(v, box)) continue;
            if (!check(xp, xpp, m, j)) return false;
        }
    }
    return true;
}

bool weak_interval_dominance(const Poset& p, const ObjectiveTable& v, const ObjectiveTable& u) {
    return interval_qualified_scan(
        p, v, u, [&](std::size_t xp, std::size_t xpp, std::size_t m, std::size_t j) {
            const Rational hyp_max = max_over(u, order::closed_interval(p, m, xp));
            const Rational con_max = max_over(v, order::closed_interval(p, xpp, j));
            if (u[xpp] >= hyp_max && !(con_max >= v[xp])) return false;
            if (u[xpp] > hyp_max && !(con_max > v[xp])) return false;
            return true;
        });
}

bool interval_dominance(const Poset& p, const ObjectiveTable& v, const ObjectiveTable& u) {
    return interval_qualified_scan(
        p, v, u, [&](std::size_t xp, std::size_t xpp, std::size_t m, std::size_t j) {
            if (u[xpp] >= u[m] && !(v[j] >= v[xp])) return false;
            if (u[xpp] > u[m] && !(v[j] > v[xp])) return false;
            return true;
        });
}

bool qs_interval_dominance(const Poset& p, const ObjectiveTable& v, const ObjectiveTable& u) {
    const std::size_t n = p.size();
    for (std::size_t xp = 0; xp < n; ++xp) {
        const Bitset& above = p.upset(xp);
        for (std::size_t xpp = above.first(); xpp < n; xpp = above.next(xpp + 1)) {
            if (xpp == xp) continue;
            const Bitset box = order::closed_interval(p, xp, xpp);
            if (u[xpp] < max_over(u, box)) continue;
            if (u[xpp] >= u[xp] && !(v[xpp] >= v[xp])) return false;
            if (u[xpp] > u[xp] && !(v[xpp] > v[xp])) return false;
        }
    }
    return true;
}

}  // namespace

Bitset argmax(const Poset& p, const Bitset& s, const ObjectiveTable& f) {
    if (f.size() != p.size()) throw SchemaError("objective table size mismatch");
    if (s.none()) throw EmptyDomainError("argmax over empty domain");
    const Rational best = max_over(f, s);
    Bitset out(p.size());
    for (std::size_t i = s.first(); i < p.size(); i = s.next(i + 1)) {
        if (f[i] == best) out.set(i);
    }
    return out;
}

bool quasi_supermodular(const Poset& p, const ObjectiveTable& f) {
    require_lattice(p);
    const std::size_t n = p.size();
    for (std::size_t xp = 0; xp < n; ++xp) {
        for (std::size_t xpp = 0; xpp < n; ++xpp) {
            const std::size_t m = *p.meet(xp, xpp);
            const std::size_t j = *p.join(xp, xpp);
            if (f[xpp] >= f[m] && !(f[j] >= f[xp])) return false;
            if (f[xpp] > f[m] && !(f[j] > f[xp])) return false;
        }
    }
    return true;
}

bool i_quasi_supermodular(const Poset& p, const ObjectiveTable& f) {
    require_lattice(p);
    const std::size_t n = p.size();
    for (std::size_t xp = 0; xp < n; ++xp) {
        for (std::size_t xpp = 0; xpp < n; ++xpp) {
            const std::size_t m = *p.meet(xp, xpp);
            const std::size_t j = *p.join(xp, xpp);
            if (f[xp] < max_over(f, order::closed_interval(p, m, xp))) continue;
            if (f[xp] >= f[m] && !(f[j] >= f[xpp])) return false;
            if (f[xp] > f[m] && !(f[j] > f[xpp])) return false;
        }
    }
    return true;
}

bool dominates(const Poset& p, DominanceKind kind, const ObjectiveTable& v,
               const ObjectiveTable& u) {
    if (v.size() != p.size() || u.size() != p.size()) {
        throw SchemaError("objective table size mismatch");
    }
    switch (kind) {
        case DominanceKind::SingleCrossing: return single_crossing(p, v, u);
        case DominanceKind::MS:
            return single_crossing(p, v, u) && quasi_supermodular(p, u) &&
                   quasi_supermodular(p, v);
        case DominanceKind::Weak: return weak_dominance(p, v, u);
        case DominanceKind::WeakInterval: return weak_interval_dominance(p, v, u);
        case DominanceKind::Interval: return interval_dominance(p, v, u);
        case DominanceKind::QSInterval: return qs_interval_dominance(p, v, u);
    }
    return false;
}

std::optional<MaximizerWitness> wmcs_witness_search(const Poset& p, const ObjectiveTable& v,
                                                    const ObjectiveTable& u, DomainFamily family,
                                                    order::SetOrderMode mode, std::size_t budget,
                                                    std::size_t exhaustive_limit) {
    std::size_t examined = 0;
    auto probe = [&](const Bitset& s) -> std::optional<MaximizerWitness> {
        if (s.none()) return std::nullopt;
        if (++examined > budget) {
            throw BudgetExceeded("witness search budget hit after " + std::to_string(budget) +
                                 " domains");
        }
        Bitset mu = argmax(p, s, u);
        Bitset mv = argmax(p, s, v);
        if (!order::set_dominates(p, mv, mu, mode)) {
            return MaximizerWitness{s, mu, mv};
        }
        return std::nullopt;
    };

    std::optional<MaximizerWitness> found;
    if (family == DomainFamily::Subintervals) {
        for (const Bitset& s : order::all_subintervals(p)) {
            if ((found = probe(s))) return found;
        }
        return std::nullopt;
    }
    if (p.size() <= exhaustive_limit) {
        for_each_subset(p.full_set(), [&](const Bitset& s) {
            if (s.none() || !order::is_sublattice(p, s)) return true;
            found = probe(s);
            return !found.has_value();
        });
        return found;
    }
    // Four-point necessity family: enough to refute dominance when it fails.
    require_lattice(p);
    const std::size_t n = p.size();
    for (std::size_t xp = 0; xp < n; ++xp) {
        for (std::size_t xpp = 0; xpp < n; ++xpp) {
            if (p.leq(xpp, xp)) continue;
            Bitset s(n);
            s.set(xp);
            s.set(xpp);
            s.set(*p.meet(xp, xpp));
            s.set(*p.join(xp, xpp));
            if ((found = probe(s))) return found;
        }
    }
    return std::nullopt;
}

}  // namespace wmcs::choice
