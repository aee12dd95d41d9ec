#include "wmcs/pareto.hpp"

namespace wmcs::pareto {

void UtilityProfile::validate(const Poset& p) const {
    if (agents.empty()) throw SchemaError("utility profile needs at least one agent");
    for (const auto& t : agents) {
        if (t.size() != p.size()) throw SchemaError("utility table size mismatch");
    }
}

bool pareto_dominates(const UtilityProfile& u, std::size_t y, std::size_t x) {
    bool strict = false;
    for (const auto& t : u.agents) {
        if (t[y] < t[x]) return false;
        if (t[y] > t[x]) strict = true;
    }
    return strict;
}

Bitset pareto_set(const Poset& p, const UtilityProfile& u) {
    u.validate(p);
    const std::size_t n = p.size();
    Bitset out(n);
    for (std::size_t x = 0; x < n; ++x) {
        bool dominated = false;
        for (std::size_t y = 0; y < n && !dominated; ++y) {
            dominated = pareto_dominates(u, y, x);
        }
        if (!dominated) out.set(x);
    }
    return out;
}

std::size_t dominating_chain(const Poset& p, const UtilityProfile& u, std::size_t x) {
    u.validate(p);
    {
        bool optimal = true;
        for (std::size_t y = 0; y < p.size() && optimal; ++y) {
            optimal = !pareto_dominates(u, y, x);
        }
        if (optimal) return x;
    }
    std::size_t cur = x;
    for (const auto& ui : u.agents) {
        // everyone weakly gains relative to the previous waypoint
        Bitset feasible(p.size());
        for (std::size_t y = 0; y < p.size(); ++y) {
            bool ok = true;
            for (const auto& uj : u.agents) ok = ok && uj[y] >= uj[cur];
            if (ok) feasible.set(y);
        }
        cur = choice::argmax(p, feasible, ui).first();
    }
    return cur;
}

bool phi_membership(const Poset& p, const UtilityProfile& u, std::size_t x) {
    u.validate(p);
    const std::size_t k = u.n_agents();
    for (std::size_t i = 0; i < k; ++i) {
        Bitset others_agree(p.size());
        for (std::size_t y = 0; y < p.size(); ++y) {
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                if (j != i) ok = u.agents[j][y] >= u.agents[j][x];
            }
            if (ok) others_agree.set(y);
        }
        if (!choice::argmax(p, others_agree, u.agents[i]).test(x)) return false;
    }
    return true;
}

void WeightSequence::validate(std::size_t n_agents) const {
    if (steps.empty() || steps.size() > n_agents) {
        throw SchemaError("weight sequence length must be in [1, n_agents]");
    }
    for (const auto& phi : steps) {
        if (phi.size() != n_agents) throw SchemaError("weight vector size mismatch");
        bool nonzero = false;
        for (const auto& w : phi) {
            if (w.is_negative()) throw SchemaError("weights must be nonnegative");
            nonzero = nonzero || !w.is_zero();
        }
        if (!nonzero) throw SchemaError("weight vector must be nonzero");
    }
    for (const auto& w : steps.back()) {
        if (w.is_zero()) throw SchemaError("final weight vector must be strictly positive");
    }
}

Bitset sequential_weighted_max(const Poset& p, const UtilityProfile& u, const WeightSequence& w) {
    u.validate(p);
    w.validate(u.n_agents());
    Bitset current = p.full_set();
    for (const auto& phi : w.steps) {
        choice::ObjectiveTable welfare(p.size(), Rational(0));
        for (std::size_t i = 0; i < u.n_agents(); ++i) {
            if (phi[i].is_zero()) continue;
            for (std::size_t x = 0; x < p.size(); ++x) welfare[x] += phi[i] * u.agents[i][x];
        }
        current = choice::argmax(p, current, welfare);
    }
    return current;
}

bool profile_dominates(const Poset& p, ProfileDominance kind, const UtilityProfile& v,
                       const UtilityProfile& u) {
    u.validate(p);
    v.validate(p);
    if (u.n_agents() != v.n_agents()) throw SchemaError("profiles have different agent counts");
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < u.n_agents(); ++i) {
        if (kind == ProfileDominance::SingleCrossing) {
            if (!choice::dominates(p, choice::DominanceKind::SingleCrossing, v.agents[i],
                                   u.agents[i])) {
                return false;
            }
            continue;
        }
        for (std::size_t lo = 0; lo < n; ++lo) {
            const Bitset& above = p.upset(lo);
            for (std::size_t hi = above.first(); hi < n; hi = above.next(hi + 1)) {
                if (hi == lo) continue;
                if (v.agents[i][hi] - v.agents[i][lo] < u.agents[i][hi] - u.agents[i][lo]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool supermodular_profile(const Poset& p, const UtilityProfile& u) {
    u.validate(p);
    if (!p.is_lattice()) throw NotLatticeError("supermodularity requires a lattice");
    const std::size_t n = p.size();
    for (const auto& t : u.agents) {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                const std::size_t j = *p.join(a, b);
                const std::size_t m = *p.meet(a, b);
                if (t[j] - t[a] < t[b] - t[m]) return false;
            }
        }
    }
    return true;
}

WmcsVerdict pareto_wmcs_check(const Poset& p, ProfileDominance kind, const UtilityProfile& v,
                              const UtilityProfile& u) {
    if (!profile_dominates(p, kind, v, u)) {
        throw HypothesisError("profile dominance hypothesis fails");
    }
    if (kind == ProfileDominance::IncreasingDifferences) {
        if (!supermodular_profile(p, u) || !supermodular_profile(p, v)) {
            throw HypothesisError("profiles are not supermodular");
        }
    }
    const Bitset pu = pareto_set(p, u);
    const Bitset pv = pareto_set(p, v);
    WmcsVerdict verdict;
    verdict.holds = order::weak_dominates(p, pv, pu);
    if (!verdict.holds) {
        for (std::size_t x = pu.first(); x < p.size(); x = pu.next(x + 1)) {
            if (!pv.intersects(p.upset(x))) {
                verdict.witness = x;
                return verdict;
            }
        }
        for (std::size_t x = pv.first(); x < p.size(); x = pv.next(x + 1)) {
            if (!pu.intersects(p.downset(x))) {
                verdict.witness = x;
                return verdict;
            }
        }
    }
    return verdict;
}

namespace {

Rational sq(const Rational& r) { return r * r; }

}  // namespace

UtilityProfile investment_profile_on(const Poset& grid, const Rational& omega_a,
                                     const Rational& omega_b) {
    UtilityProfile u;
    u.agents.assign(2, choice::ObjectiveTable(grid.size(), Rational(0)));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const std::string& l = grid.label(i);  // "(x,y)"
        auto comma = l.find(',');
        Rational x = Rational::parse(l.substr(1, comma - 1));
        Rational y = Rational::parse(l.substr(comma + 1, l.size() - comma - 2));
        u.agents[0][i] = -sq(x - 2 * omega_a) - sq(y - omega_b);
        u.agents[1][i] = -sq(x - omega_a) - sq(y - 2 * omega_b);
    }
    return u;
}

GridProfile investment_profile(long long den, const Rational& omega_a, const Rational& omega_b) {
    Poset axis = unit_grid_chain(den);
    Poset grid = Poset::product(axis, axis);
    UtilityProfile u = investment_profile_on(grid, omega_a, omega_b);
    return GridProfile{std::move(grid), std::move(u)};
}

}  // namespace wmcs::pareto
