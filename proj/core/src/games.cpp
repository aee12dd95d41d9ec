#include "wmcs/games.hpp"

#include <algorithm>
#include <functional>

namespace wmcs::games {

std::size_t GameDef::n_profiles() const {
    std::size_t n = 1;
    for (const auto& s : strategy) n *= s.size();
    return n;
}

std::size_t GameDef::n_opponent_profiles(std::size_t i) const {
    std::size_t n = 1;
    for (std::size_t j = 0; j < players(); ++j) {
        if (j != i) n *= strategy[j].size();
    }
    return n;
}

std::size_t GameDef::profile_index(const std::vector<std::size_t>& s) const {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < players(); ++j) idx = idx * strategy[j].size() + s[j];
    return idx;
}

std::vector<std::size_t> GameDef::profile_of(std::size_t idx) const {
    std::vector<std::size_t> s(players());
    for (std::size_t j = players(); j-- > 0;) {
        s[j] = idx % strategy[j].size();
        idx /= strategy[j].size();
    }
    return s;
}

std::size_t GameDef::opponent_index(const std::vector<std::size_t>& s, std::size_t i) const {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < players(); ++j) {
        if (j != i) idx = idx * strategy[j].size() + s[j];
    }
    return idx;
}

std::vector<std::size_t> GameDef::opponents_of(std::size_t opp_idx, std::size_t i) const {
    std::vector<std::size_t> s(players(), 0);
    for (std::size_t j = players(); j-- > 0;) {
        if (j == i) continue;
        s[j] = opp_idx % strategy[j].size();
        opp_idx /= strategy[j].size();
    }
    return s;
}

std::size_t GameDef::compose(std::size_t i, std::size_t si, std::size_t opp) const {
    std::vector<std::size_t> s = opponents_of(opp, i);
    s[i] = si;
    return profile_index(s);
}

void GameDef::validate() const {
    if (strategy.empty() || strategy.size() != rule.size()) {
        throw SchemaError("game needs one strategy poset and one rule per player");
    }
    const std::size_t np = n_profiles();
    for (std::size_t i = 0; i < players(); ++i) {
        if (const auto* u = std::get_if<UtilityBR>(&rule[i])) {
            if (u->u.size() != np) throw SchemaError("utility table size mismatch");
        } else if (const auto* pr = std::get_if<ParetoBR>(&rule[i])) {
            if (pr->sub.empty()) throw SchemaError("pareto rule needs sub-players");
            for (const auto& t : pr->sub) {
                if (t.size() != np) throw SchemaError("sub-player table size mismatch");
            }
        } else {
            const auto& ex = std::get<ExplicitBR>(rule[i]);
            if (ex.br.size() != n_opponent_profiles(i)) {
                throw SchemaError("explicit best-response table size mismatch");
            }
            for (const auto& b : ex.br) {
                if (b.none() || b.size() != strategy[i].size()) {
                    throw SchemaError("explicit best responses must be nonempty own-subsets");
                }
            }
        }
    }
}

Bitset best_response(const GameDef& g, std::size_t i, std::size_t opp_idx) {
    const Poset& si = g.strategy[i];
    if (const auto* u = std::get_if<GameDef::UtilityBR>(&g.rule[i])) {
        choice::ObjectiveTable slice(si.size(), Rational(0));
        for (std::size_t s = 0; s < si.size(); ++s) slice[s] = u->u[g.compose(i, s, opp_idx)];
        return choice::argmax(si, si.full_set(), slice);
    }
    if (const auto* pr = std::get_if<GameDef::ParetoBR>(&g.rule[i])) {
        pareto::UtilityProfile prof;
        prof.agents.reserve(pr->sub.size());
        for (const auto& t : pr->sub) {
            choice::ObjectiveTable slice(si.size(), Rational(0));
            for (std::size_t s = 0; s < si.size(); ++s) slice[s] = t[g.compose(i, s, opp_idx)];
            prof.agents.push_back(std::move(slice));
        }
        return pareto::pareto_set(si, prof);
    }
    return std::get<GameDef::ExplicitBR>(g.rule[i]).br[opp_idx];
}

std::vector<std::vector<Bitset>> precompute_best_responses(const GameDef& g) {
    std::vector<std::vector<Bitset>> brs(g.players());
    for (std::size_t i = 0; i < g.players(); ++i) {
        const std::size_t no = g.n_opponent_profiles(i);
        brs[i].reserve(no);
        for (std::size_t o = 0; o < no; ++o) brs[i].push_back(best_response(g, i, o));
    }
    return brs;
}

namespace {

// componentwise order on decoded opponent profiles
bool opp_leq(const GameDef& g, std::size_t i, std::size_t lo, std::size_t hi) {
    auto a = g.opponents_of(lo, i);
    auto b = g.opponents_of(hi, i);
    for (std::size_t j = 0; j < g.players(); ++j) {
        if (j != i && !g.strategy[j].leq(a[j], b[j])) return false;
    }
    return true;
}

}  // namespace

WscReport classify_wsc(const GameDef& g) {
    g.validate();
    auto brs = precompute_best_responses(g);
    WscReport r;
    bool all_uws = true;
    bool all_lws = true;
    for (std::size_t i = 0; i < g.players() && (all_uws || all_lws); ++i) {
        const std::size_t no = g.n_opponent_profiles(i);
        for (std::size_t lo = 0; lo < no; ++lo) {
            for (std::size_t hi = 0; hi < no; ++hi) {
                if (lo == hi || !opp_leq(g, i, lo, hi)) continue;
                if (all_uws && !order::upper_weak_dominates(g.strategy[i], brs[i][hi],
                                                            brs[i][lo])) {
                    all_uws = false;
                    r.detail = "player " + std::to_string(i) +
                               " best response not upper weak set monotonic";
                }
                if (all_lws && !order::lower_weak_dominates(g.strategy[i], brs[i][hi],
                                                            brs[i][lo])) {
                    all_lws = false;
                    if (r.detail.empty()) {
                        r.detail = "player " + std::to_string(i) +
                                   " best response not lower weak set monotonic";
                    }
                }
            }
        }
    }
    const std::size_t np = g.n_profiles();
    for (std::size_t p = 0; p < np && (!r.plus_start || !r.minus_start); ++p) {
        auto s = g.profile_of(p);
        bool up_ok = true;
        bool down_ok = true;
        for (std::size_t i = 0; i < g.players() && (up_ok || down_ok); ++i) {
            const Bitset& br = brs[i][g.opponent_index(s, i)];
            up_ok = up_ok && br.intersects(g.strategy[i].upset(s[i]));
            down_ok = down_ok && br.intersects(g.strategy[i].downset(s[i]));
        }
        if (up_ok && !r.plus_start) r.plus_start = p;
        if (down_ok && !r.minus_start) r.minus_start = p;
    }
    r.in_g_plus = all_uws && r.plus_start.has_value();
    r.in_g_minus = all_lws && r.minus_start.has_value();
    return r;
}

std::vector<std::size_t> nash_set(const GameDef& g, std::size_t max_profiles) {
    g.validate();
    const std::size_t np = g.n_profiles();
    if (np > max_profiles) {
        throw SizeLimitError("profile space of " + std::to_string(np) + " exceeds cap " +
                             std::to_string(max_profiles));
    }
    auto brs = precompute_best_responses(g);
    std::vector<std::size_t> eq;
    for (std::size_t p = 0; p < np; ++p) {
        auto s = g.profile_of(p);
        bool nash = true;
        for (std::size_t i = 0; i < g.players() && nash; ++i) {
            nash = brs[i][g.opponent_index(s, i)].test(s[i]);
        }
        if (nash) eq.push_back(p);
    }
    if (eq.empty()) {
        WscReport r = classify_wsc(g);
        if (r.in_g_plus || r.in_g_minus) {
            throw TheoremViolation("game with weak strategic complementarities has no pure Nash");
        }
    }
    return eq;
}

Poset profile_poset(const GameDef& g, std::size_t max_elements) {
    Poset p = g.strategy[0];
    for (std::size_t i = 1; i < g.players(); ++i) {
        p = Poset::product(p, g.strategy[i], max_elements);
    }
    return p;
}

fp::Correspondence br_correspondence(const GameDef& g, const Poset& profiles) {
    auto brs = precompute_best_responses(g);
    fp::Correspondence f;
    f.image.assign(profiles.size(), Bitset(profiles.size()));
    for (std::size_t p = 0; p < profiles.size(); ++p) {
        auto s = g.profile_of(p);
        // cartesian product of the per-player best responses
        std::vector<const Bitset*> parts(g.players());
        for (std::size_t i = 0; i < g.players(); ++i) {
            parts[i] = &brs[i][g.opponent_index(s, i)];
        }
        std::vector<std::size_t> pick(g.players());
        std::function<void(std::size_t)> emit = [&](std::size_t i) {
            if (i == g.players()) {
                f.image[p].set(g.profile_index(pick));
                return;
            }
            for (std::size_t v = parts[i]->first(); v < parts[i]->size();
                 v = parts[i]->next(v + 1)) {
                pick[i] = v;
                emit(i + 1);
            }
        };
        emit(0);
    }
    return f;
}

NashCompareReport nash_compare(const GameDef& g, const GameDef& g_new, order::SetOrderMode mode,
                               std::size_t max_profiles) {
    g.validate();
    g_new.validate();
    if (g.players() != g_new.players()) throw HypothesisError("player counts differ");
    for (std::size_t i = 0; i < g.players(); ++i) {
        if (g.strategy[i].size() != g_new.strategy[i].size()) {
            throw HypothesisError("strategy spaces differ");
        }
    }

    auto brs = precompute_best_responses(g);
    auto brs_new = precompute_best_responses(g_new);
    const bool need_upper = mode == order::SetOrderMode::Upper || mode == order::SetOrderMode::Weak;
    const bool need_lower = mode == order::SetOrderMode::Lower || mode == order::SetOrderMode::Weak;
    if (mode == order::SetOrderMode::Strong) {
        throw HypothesisError("equilibrium comparisons are made in weak set orders");
    }
    for (std::size_t i = 0; i < g.players(); ++i) {
        for (std::size_t o = 0; o < g.n_opponent_profiles(i); ++o) {
            if (need_upper &&
                !order::upper_weak_dominates(g.strategy[i], brs_new[i][o], brs[i][o])) {
                throw HypothesisError("shifted best responses do not uws-dominate originals");
            }
            if (need_lower &&
                !order::lower_weak_dominates(g.strategy[i], brs_new[i][o], brs[i][o])) {
                throw HypothesisError("shifted best responses do not lws-dominate originals");
            }
        }
    }
    WscReport cls = classify_wsc(g);
    WscReport cls_new = classify_wsc(g_new);
    if (need_upper && !cls_new.in_g_plus) {
        throw HypothesisError("shifted game lacks upper weak strategic complementarities");
    }
    if (need_lower && !cls.in_g_minus) {
        throw HypothesisError("base game lacks lower weak strategic complementarities");
    }

    auto eq = nash_set(g, max_profiles);
    auto eq_new = nash_set(g_new, max_profiles);
    if (need_upper && eq.empty()) throw HypothesisError("base game has no equilibrium");
    if (need_lower && eq_new.empty()) throw HypothesisError("shifted game has no equilibrium");

    Poset profiles = profile_poset(g, max_profiles);
    Bitset eq_set(profiles.size());
    for (auto e : eq) eq_set.set(e);
    Bitset eq_new_set(profiles.size());
    for (auto e : eq_new) eq_new_set.set(e);

    NashCompareReport report;
    report.holds = true;
    if (need_upper) report.holds &= order::upper_weak_dominates(profiles, eq_new_set, eq_set);
    if (need_lower) report.holds &= order::lower_weak_dominates(profiles, eq_new_set, eq_set);

    fp::Correspondence f = br_correspondence(g, profiles);
    fp::Correspondence f_new = br_correspondence(g_new, profiles);
    if (need_upper) {
        for (auto e : eq) {
            report.lifts.emplace_back(e, fp::cs_lift(profiles, f, f_new, e, fp::LiftMode::Upper));
        }
    }
    if (need_lower) {
        for (auto e : eq_new) {
            report.lifts.emplace_back(e, fp::cs_lift(profiles, f_new, f, e, fp::LiftMode::Lower));
        }
    }
    return report;
}

std::optional<std::size_t> nash_iterate(const GameDef& g, fp::Direction dir) {
    g.validate();
    WscReport cls = classify_wsc(g);
    const bool up = dir == fp::Direction::Up;
    auto start = up ? cls.plus_start : cls.minus_start;
    if (!start || (up && !cls.in_g_plus) || (!up && !cls.in_g_minus)) {
        throw HypothesisError("game lacks the directional complementarities for iteration");
    }
    std::vector<std::size_t> s = g.profile_of(*start);
    // bounded by the total height of the strategy chains
    std::size_t max_steps = 1;
    for (const auto& sp : g.strategy) max_steps += sp.size();
    for (std::size_t step = 0; step < max_steps; ++step) {
        bool fixed = true;
        std::vector<std::size_t> next = s;
        for (std::size_t i = 0; i < g.players(); ++i) {
            Bitset br = best_response(g, i, g.opponent_index(s, i));
            if (br.test(s[i])) {
                next[i] = s[i];
                continue;
            }
            fixed = false;
            const Bitset& cone = up ? g.strategy[i].upset(s[i]) : g.strategy[i].downset(s[i]);
            Bitset candidates = br & cone;
            if (candidates.none()) {
                throw TheoremViolation("monotone response dynamics stranded");
            }
            next[i] = candidates.first();
        }
        if (fixed) return g.profile_index(s);
        s = std::move(next);
    }
    throw TheoremViolation("response dynamics failed to settle within the chain bound");
}

bool payoff_monotone(const GameDef& g, std::size_t i) {
    const auto* u = std::get_if<GameDef::UtilityBR>(&g.rule[i]);
    if (!u) throw SchemaError("payoff monotonicity applies to utility-rule players");
    const std::size_t no = g.n_opponent_profiles(i);
    for (std::size_t lo = 0; lo < no; ++lo) {
        for (std::size_t hi = 0; hi < no; ++hi) {
            if (lo == hi || !opp_leq(g, i, lo, hi)) continue;
            for (std::size_t s = 0; s < g.strategy[i].size(); ++s) {
                if (u->u[g.compose(i, s, hi)] < u->u[g.compose(i, s, lo)]) return false;
            }
        }
    }
    return true;
}

std::vector<Rational> equilibrium_payoffs(const GameDef& g, std::size_t i,
                                          const std::vector<std::size_t>& profiles) {
    const auto* u = std::get_if<GameDef::UtilityBR>(&g.rule[i]);
    if (!u) throw SchemaError("payoffs require a utility-rule player");
    std::vector<Rational> out;
    out.reserve(profiles.size());
    for (auto p : profiles) out.push_back(u->u[p]);
    std::sort(out.begin(), out.end());
    return out;
}

bool rational_set_dominates(const std::vector<Rational>& sp, const std::vector<Rational>& s,
                            order::SetOrderMode mode) {
    auto upper = [&] {
        if (s.empty()) return true;
        if (sp.empty()) return false;
        return *std::max_element(sp.begin(), sp.end()) >= *std::max_element(s.begin(), s.end());
    };
    auto lower = [&] {
        if (sp.empty()) return true;
        if (s.empty()) return false;
        return *std::min_element(s.begin(), s.end()) <= *std::min_element(sp.begin(), sp.end());
    };
    switch (mode) {
        case order::SetOrderMode::Upper: return upper();
        case order::SetOrderMode::Lower: return lower();
        case order::SetOrderMode::Weak: return upper() && lower();
        case order::SetOrderMode::Strong: break;
    }
    throw SchemaError("rational sets are compared in weak set orders");
}

}  // namespace wmcs::games
