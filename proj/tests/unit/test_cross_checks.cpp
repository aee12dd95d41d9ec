// Higher-volume randomized agreement checks between independent code paths:
// definitional scans on one side, exhaustive enumeration oracles on the
// other. These overlap the per-module suites on purpose.
#include <doctest.h>

#include <algorithm>

#include "wmcs/beauty.hpp"
#include "wmcs/gen.hpp"
#include "wmcs/instances.hpp"

using namespace wmcs;

TEST_CASE("dominance scans agree with maximizer-shift enumeration at volume") {
    Rng rng(20240);
    std::size_t weak_true = 0, wi_true = 0, iv_true = 0;
    for (int t = 0; t < 2000; ++t) {
        Rng sub = rng.fork(t);
        Poset p = gen::random_lattice(sub, 7);
        auto u = gen::random_table(sub, p, 2);
        auto v = sub.coin(0.35) ? u : gen::random_table(sub, p, 2);

        bool weak = choice::dominates(p, choice::DominanceKind::Weak, v, u);
        weak_true += weak;
        CHECK(weak == !choice::wmcs_witness_search(p, v, u, choice::DomainFamily::Sublattices,
                                                   order::SetOrderMode::Weak)
                           .has_value());
        bool wi = choice::dominates(p, choice::DominanceKind::WeakInterval, v, u);
        wi_true += wi;
        CHECK(wi == !choice::wmcs_witness_search(p, v, u, choice::DomainFamily::Subintervals,
                                                 order::SetOrderMode::Weak)
                         .has_value());
        bool iv = choice::dominates(p, choice::DominanceKind::Interval, v, u);
        iv_true += iv;
        CHECK(iv == !choice::wmcs_witness_search(p, v, u, choice::DomainFamily::Subintervals,
                                                 order::SetOrderMode::Strong)
                         .has_value());
    }
    // both truth values must actually occur for the equivalences to bite
    CHECK(weak_true > 400);
    CHECK(weak_true < 2000);
    CHECK(wi_true > weak_true);  // strictly weaker condition fires at least as often
    CHECK(iv_true > 0);
}

TEST_CASE("raw correspondences filtered by classification still obey existence") {
    Rng rng(20241);
    std::size_t kept = 0;
    for (int t = 0; t < 3000; ++t) {
        Rng sub = rng.fork(t);
        Poset p = gen::random_poset(sub, 6);
        auto f = gen::random_correspondence(sub, p, gen::CorrShape::Raw);
        auto cls = fp::classify(p, f);
        if (!cls.in_f_plus() && !cls.in_f_minus()) continue;
        ++kept;
        CHECK(fp::fixed_points(p, f).any());
    }
    CHECK(kept > 100);
}

TEST_CASE("availability operator is monotone on small admissible economies") {
    Rng rng(20242);
    std::size_t used = 0;
    for (int t = 0; t < 40 && used < 12; ++t) {
        Rng sub = rng.fork(t);
        auto e = gen::random_economy(sub, 4);
        if (e.u.size() > 4) continue;
        bool admissible = true;
        for (auto a : matching::all_agents(e)) {
            admissible = admissible && matching::weak_substitutable(e, a).holds;
        }
        if (!admissible) continue;
        ++used;
        CHECK(matching::t_monotone_check(e).monotone);
    }
    CHECK(used >= 12);
}

TEST_CASE("worker exit on random admissible economies yields ordered witnesses") {
    Rng rng(20243);
    std::size_t used = 0;
    for (int t = 0; t < 80 && used < 20; ++t) {
        Rng sub = rng.fork(t);
        auto base = gen::random_economy(sub, 6);
        bool admissible = true;
        for (auto a : matching::all_agents(base)) {
            admissible = admissible &&
                         matching::axiom_check(base, a, matching::Axiom::SenAlpha).holds &&
                         matching::weak_substitutable(base, a).holds;
        }
        if (!admissible) continue;
        auto shifted = base;
        std::size_t quitter = sub.below(base.u.n_workers);
        shifted.worker_rule[quitter] =
            matching::WorkerOrderRule::from_list(shifted.u, quitter, {});
        ++used;
        auto rep = matching::matching_cs(base, shifted);  // verifies internally
        CHECK(rep.per_base.size() == matching::stable_set(base).size());
        for (const auto& w : rep.per_base) {
            CHECK(!(w.shifted & shifted.u.worker_contracts[quitter]).any());
        }
    }
    CHECK(used >= 20);
}

TEST_CASE("equilibrium sets of the coordination game against a fresh oracle") {
    // independent Nash test: a profile is an equilibrium iff no own-strategy
    // replacement produces a sub-player improvement that nobody pays for
    games::BeautyContestSpec spec;
    spec.n_players = 2;
    spec.grid_den = 2;
    spec.theta_a = Rational(0);
    spec.theta_b = Rational(0);
    auto g = games::beauty_contest_build(spec);
    auto eq = games::nash_set(g);
    const auto& rule0 = std::get<games::GameDef::ParetoBR>(g.rule[0]);
    const auto& rule1 = std::get<games::GameDef::ParetoBR>(g.rule[1]);
    std::vector<std::size_t> oracle;
    for (std::size_t p = 0; p < g.n_profiles(); ++p) {
        auto s = g.profile_of(p);
        bool nash = true;
        for (std::size_t i = 0; i < 2 && nash; ++i) {
            const auto& rule = i == 0 ? rule0 : rule1;
            // dominated own strategy: some deviation weakly improves both
            // divisions and strictly improves one
            for (std::size_t dev = 0; dev < g.strategy[i].size() && nash; ++dev) {
                if (dev == s[i]) continue;
                auto alt = s;
                alt[i] = dev;
                std::size_t p_alt = g.profile_index(alt);
                bool weak_all = true;
                bool strict_one = false;
                for (const auto& table : rule.sub) {
                    if (table[p_alt] < table[p]) weak_all = false;
                    if (table[p_alt] > table[p]) strict_one = true;
                }
                if (weak_all && strict_one) nash = false;
            }
        }
        if (nash) oracle.push_back(p);
    }
    CHECK(eq == oracle);
}
