#include "wmcs/bertrand.hpp"

#include <algorithm>
#include <set>

namespace wmcs::games {

Rational BertrandSpec::Cost::at(const Rational& q) const {
    if (linear) return marginal * q;
    for (const auto& [qq, cc] : table) {
        if (qq == q) return cc;
    }
    throw RuleDomainError("cost table has no entry for quantity " + q.str());
}

std::size_t BertrandSpec::n_profiles() const {
    std::size_t n = 1;
    for (const auto& g : grids) n *= g.size();
    return n;
}

std::vector<std::size_t> BertrandSpec::profile_of(std::size_t idx) const {
    std::vector<std::size_t> p(firms());
    for (std::size_t i = firms(); i-- > 0;) {
        p[i] = idx % grids[i].size();
        idx /= grids[i].size();
    }
    return p;
}

std::size_t BertrandSpec::profile_index(const std::vector<std::size_t>& p) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < firms(); ++i) idx = idx * grids[i].size() + p[i];
    return idx;
}

Rational BertrandSpec::demand(std::size_t firm, const std::vector<std::size_t>& prof) const {
    if (demand_kind == Demand::Table) return demand_table[firm][profile_index(prof)];
    // lowest-price split
    Rational own = grids[firm][prof[firm]];
    Rational lowest = own;
    std::size_t argmin_count = 0;
    for (std::size_t j = 0; j < firms(); ++j) {
        Rational pj = grids[j][prof[j]];
        if (pj < lowest) lowest = pj;
    }
    for (std::size_t j = 0; j < firms(); ++j) {
        if (grids[j][prof[j]] == lowest) ++argmin_count;
    }
    if (own == lowest) return Rational(1, static_cast<long long>(argmin_count));
    return Rational(0);
}

Rational BertrandSpec::payoff(std::size_t firm, const std::vector<std::size_t>& prof) const {
    Rational q = demand(firm, prof);
    return grids[firm][prof[firm]] * q - cost[firm].at(q);
}

void BertrandSpec::validate_shape() const {
    if (grids.empty()) throw SchemaError("price game needs at least one firm");
    if (cost.size() != firms()) throw SchemaError("one cost spec per firm required");
    for (const auto& g : grids) {
        if (g.empty()) throw SchemaError("empty price grid");
        for (std::size_t k = 1; k < g.size(); ++k) {
            if (!(g[k - 1] < g[k])) throw SchemaError("price grids must be strictly ascending");
        }
    }
    if (demand_kind == Demand::Table) {
        if (demand_table.size() != firms()) throw SchemaError("one demand table per firm");
        for (const auto& t : demand_table) {
            if (t.size() != n_profiles()) throw SchemaError("demand table size mismatch");
            for (const auto& d : t) {
                if (d.is_negative()) throw SchemaError("demand must be nonnegative");
            }
        }
    }
}

BertrandSpec pure_bertrand(std::vector<std::vector<Rational>> grids,
                           std::vector<Rational> marginal_costs) {
    BertrandSpec spec;
    spec.grids = std::move(grids);
    spec.demand_kind = BertrandSpec::Demand::PureSplit;
    for (const auto& c : marginal_costs) {
        if (c.is_negative()) throw SchemaError("marginal cost must be nonnegative");
        spec.cost.push_back(BertrandSpec::Cost::linear_cost(c));
    }
    spec.validate_shape();
    return spec;
}

namespace {

// all opponent profile pairs o < o' (componentwise, not equal) for firm i
template <typename Fn>
void for_each_ordered_opponent_pair(const BertrandSpec& spec, std::size_t i, Fn&& fn) {
    const std::size_t nf = spec.firms();
    std::vector<std::size_t> radices;
    for (std::size_t j = 0; j < nf; ++j) {
        if (j != i) radices.push_back(spec.grids[j].size());
    }
    std::size_t total = 1;
    for (auto r : radices) total *= r;
    auto decode = [&](std::size_t idx) {
        std::vector<std::size_t> v(radices.size());
        for (std::size_t k = radices.size(); k-- > 0;) {
            v[k] = idx % radices[k];
            idx /= radices[k];
        }
        return v;
    };
    for (std::size_t a = 0; a < total; ++a) {
        auto va = decode(a);
        for (std::size_t b = 0; b < total; ++b) {
            if (a == b) continue;
            auto vb = decode(b);
            bool leq = true;
            for (std::size_t k = 0; k < va.size() && leq; ++k) leq = va[k] <= vb[k];
            if (!leq) continue;
            // splice into full profiles with a placeholder own price
            std::vector<std::size_t> lo(nf, 0), hi(nf, 0);
            for (std::size_t j = 0, k = 0; j < nf; ++j) {
                if (j == i) continue;
                lo[j] = va[k];
                hi[j] = vb[k];
                ++k;
            }
            fn(lo, hi);
        }
    }
}

void check_costs(const BertrandSpec& spec) {
    for (std::size_t i = 0; i < spec.firms(); ++i) {
        if (spec.cost[i].linear) {
            if (spec.cost[i].marginal.is_negative()) {
                throw Error("linear cost with negative marginal");
            }
            continue;
        }
        // quantities the demand actually reaches for this firm
        std::set<Rational> reached;
        for (std::size_t p = 0; p < spec.n_profiles(); ++p) {
            reached.insert(spec.demand(i, spec.profile_of(p)));
        }
        std::vector<Rational> qs(reached.begin(), reached.end());
        std::vector<Rational> cs;
        for (const auto& q : qs) cs.push_back(spec.cost[i].at(q));  // throws if missing
        for (std::size_t k = 1; k < qs.size(); ++k) {
            if (cs[k] < cs[k - 1]) throw Error("cost table decreasing over achievable quantities");
        }
        for (std::size_t k = 2; k < qs.size(); ++k) {
            // consecutive secant slopes must be nondecreasing
            Rational lhs = (cs[k - 1] - cs[k - 2]) * (qs[k] - qs[k - 1]);
            Rational rhs = (cs[k] - cs[k - 1]) * (qs[k - 1] - qs[k - 2]);
            if (lhs > rhs) throw Error("cost table not convex over achievable quantities");
        }
    }
}

}  // namespace

DemandReport validate_demand(const BertrandSpec& spec) {
    spec.validate_shape();
    DemandReport rep;
    const std::size_t nf = spec.firms();
    // own-price monotonicity and cross-price monotonicity
    for (std::size_t p = 0; p < spec.n_profiles() && rep.own_substitutes; ++p) {
        auto prof = spec.profile_of(p);
        for (std::size_t j = 0; j < nf && rep.own_substitutes; ++j) {
            if (prof[j] + 1 >= spec.grids[j].size()) continue;
            auto bumped = prof;
            bumped[j] += 1;
            for (std::size_t i = 0; i < nf; ++i) {
                Rational before = spec.demand(i, prof);
                Rational after = spec.demand(i, bumped);
                bool ok = (i == j) ? after <= before : after >= before;
                if (!ok) {
                    rep.own_substitutes = false;
                    rep.witness = "monotonicity fails for firm " + std::to_string(i) +
                                  " when firm " + std::to_string(j) + " moves " +
                                  spec.grids[j][prof[j]].str() + " -> " +
                                  spec.grids[j][bumped[j]].str();
                    break;
                }
            }
        }
    }
    // ratio condition: demand gets relatively flatter in own price when
    // opponents' prices rise
    for (std::size_t i = 0; i < nf && rep.inelastic_shift; ++i) {
        for_each_ordered_opponent_pair(spec, i, [&](std::vector<std::size_t> lo,
                                                    std::vector<std::size_t> hi) {
            if (!rep.inelastic_shift) return;
            for (std::size_t a = 0; a < spec.grids[i].size() && rep.inelastic_shift; ++a) {
                for (std::size_t b = a + 1; b < spec.grids[i].size(); ++b) {
                    lo[i] = a;
                    hi[i] = a;
                    Rational d_lo_a = spec.demand(i, lo);
                    if (!(d_lo_a > Rational(0))) continue;
                    Rational d_hi_a = spec.demand(i, hi);
                    lo[i] = b;
                    hi[i] = b;
                    Rational d_lo_b = spec.demand(i, lo);
                    Rational d_hi_b = spec.demand(i, hi);
                    // D(b,lo)/D(a,lo) <= D(b,hi)/D(a,hi), cross-multiplied
                    if (d_lo_b * d_hi_a > d_hi_b * d_lo_a) {
                        rep.inelastic_shift = false;
                        rep.witness = "ratio condition fails for firm " + std::to_string(i) +
                                      " at own prices " + spec.grids[i][a].str() + " < " +
                                      spec.grids[i][b].str();
                        return;
                    }
                }
            }
        });
    }
    return rep;
}

GameDef bertrand_build(const BertrandSpec& spec) {
    DemandReport rep = validate_demand(spec);
    if (!rep.own_substitutes || !rep.inelastic_shift) {
        throw DemandAxiomViolation(rep.witness);
    }
    check_costs(spec);
    GameDef g;
    for (const auto& grid : spec.grids) {
        std::vector<std::string> labels;
        labels.reserve(grid.size());
        for (const auto& price : grid) labels.push_back(price.str());
        g.strategy.push_back(Poset::chain(std::move(labels)));
    }
    const std::size_t np = spec.n_profiles();
    for (std::size_t i = 0; i < spec.firms(); ++i) {
        choice::ObjectiveTable u(np, Rational(0));
        for (std::size_t p = 0; p < np; ++p) u[p] = spec.payoff(i, spec.profile_of(p));
        g.rule.emplace_back(GameDef::UtilityBR{std::move(u)});
    }
    g.validate();
    return g;
}

bool bertrand_br_monotone(const BertrandSpec& spec) {
    GameDef g = bertrand_build(spec);
    auto brs = precompute_best_responses(g);
    for (std::size_t i = 0; i < g.players(); ++i) {
        const std::size_t no = g.n_opponent_profiles(i);
        for (std::size_t lo = 0; lo < no; ++lo) {
            for (std::size_t hi = 0; hi < no; ++hi) {
                if (lo == hi) continue;
                auto vl = g.opponents_of(lo, i);
                auto vh = g.opponents_of(hi, i);
                bool leq = true;
                for (std::size_t j = 0; j < g.players() && leq; ++j) {
                    if (j != i) leq = vl[j] <= vh[j];
                }
                if (!leq) continue;
                if (!order::lower_weak_dominates(g.strategy[i], brs[i][hi], brs[i][lo])) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool bertrand_payoff_compare(const BertrandSpec& spec, const BertrandSpec& shifted,
                             std::size_t firm, std::size_t max_profiles) {
    spec.validate_shape();
    shifted.validate_shape();
    if (spec.firms() != shifted.firms()) throw HypothesisError("firm counts differ");
    for (std::size_t i = 0; i < spec.firms(); ++i) {
        if (spec.grids[i] != shifted.grids[i]) throw HypothesisError("price grids differ");
        if (!spec.cost[i].linear || !shifted.cost[i].linear) {
            throw HypothesisError("profit comparison requires linear costs");
        }
        if (shifted.cost[i].marginal < spec.cost[i].marginal) {
            throw HypothesisError("shifted marginal costs must not fall");
        }
    }
    if (shifted.cost[firm].marginal != spec.cost[firm].marginal) {
        throw HypothesisError("the compared firm's marginal cost must be unchanged");
    }
    const std::size_t np = spec.n_profiles();
    for (std::size_t i = 0; i < spec.firms(); ++i) {
        for (std::size_t p = 0; p < np; ++p) {
            auto prof = spec.profile_of(p);
            if (spec.demand(i, prof) > shifted.demand(i, prof)) {
                throw HypothesisError("shifted demand must weakly dominate the original");
            }
        }
        // elasticity shift between the games, same form as the within-game axiom
        for (std::size_t p = 0; p < np; ++p) {
            auto prof = spec.profile_of(p);
            for (std::size_t b = prof[i] + 1; b < spec.grids[i].size(); ++b) {
                auto hi_prof = prof;
                hi_prof[i] = b;
                Rational d_a = spec.demand(i, prof);
                if (!(d_a > Rational(0))) continue;
                Rational dt_a = shifted.demand(i, prof);
                if (!(dt_a > Rational(0))) {
                    throw HypothesisError("shifted demand vanishes where original is positive");
                }
                Rational d_b = spec.demand(i, hi_prof);
                Rational dt_b = shifted.demand(i, hi_prof);
                if (d_b * dt_a > dt_b * d_a) {
                    throw HypothesisError("between-game elasticity condition fails");
                }
            }
        }
    }

    GameDef g = bertrand_build(spec);
    GameDef gs = bertrand_build(shifted);
    auto eq = nash_set(g, max_profiles);
    auto eq_new = nash_set(gs, max_profiles);
    auto profit = equilibrium_payoffs(g, firm, eq);
    auto profit_new = equilibrium_payoffs(gs, firm, eq_new);
    return rational_set_dominates(profit_new, profit, order::SetOrderMode::Lower);
}

}  // namespace wmcs::games
