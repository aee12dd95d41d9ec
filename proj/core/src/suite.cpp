#include "wmcs/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "wmcs/beauty.hpp"
#include "wmcs/bertrand.hpp"
#include "wmcs/gallery.hpp"
#include "wmcs/gen.hpp"
#include "wmcs/instances.hpp"
#include "wmcs/version.hpp"

namespace wmcs::suite {

namespace {

using order::SetOrderMode;

CriterionResult criterion(int id, const char* name) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    return r;
}

struct Checker {
    bool ok = true;
    std::string first_failure;
    std::size_t checks = 0;

    void expect(bool condition, const std::string& what) {
        ++checks;
        if (!condition && ok) {
            ok = false;
            first_failure = what;
        }
    }
};

// ------------------------------------------------------------------- c1 --

CriterionResult criterion_strong_order_decomposition(std::uint64_t seed, std::size_t lattices) {
    CriterionResult r = criterion(1, "strong set order decomposes into weak order, union closure, sandwich");
    Checker c;
    Rng rng(seed);
    for (std::size_t t = 0; t < lattices; ++t) {
        Rng sub = rng.fork(t);
        Poset p = gen::random_lattice(sub, 6);
        auto subs = order::all_sublattices(p);
        for (const Bitset& s : subs) {
            for (const Bitset& sp : subs) {
                auto rep = order::ss_decompose(p, sp, s);
                c.expect(rep.ss == (rep.ws && rep.union_sublattice && rep.sandwich),
                         "equivalence fails on a sublattice pair");
            }
        }
    }
    Poset chain = Poset::chain({"0", "1", "2", "3"});
    auto rep = order::ss_decompose(chain, Bitset::of(4, {1, 3}), Bitset::of(4, {0, 2}));
    c.expect(rep.ws && !rep.sandwich && !rep.ss, "chain witness must separate ws from ss");
    r.pass = c.ok;
    r.detail = c.ok ? std::to_string(c.checks) + " pairs" : c.first_failure;
    return r;
}

// ------------------------------------------------------------------- c2 --

CriterionResult criterion_dominance_characterizations(std::uint64_t seed, std::size_t trials) {
    CriterionResult r = criterion(2, "dominance relations match maximizer-shift quantifiers exactly");
    Checker c;
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        Rng sub = rng.fork(t);
        Poset p = gen::random_lattice(sub, 8);
        auto u = gen::random_table(sub, p, 3);
        auto v = sub.coin(0.3) ? u : gen::random_table(sub, p, 3);
        bool weak = choice::dominates(p, choice::DominanceKind::Weak, v, u);
        bool ws_all_sublattices =
            !choice::wmcs_witness_search(p, v, u, choice::DomainFamily::Sublattices,
                                         SetOrderMode::Weak)
                 .has_value();
        c.expect(weak == ws_all_sublattices, "weak dominance vs sublattice shifts");
        bool weak_interval = choice::dominates(p, choice::DominanceKind::WeakInterval, v, u);
        bool ws_all_intervals =
            !choice::wmcs_witness_search(p, v, u, choice::DomainFamily::Subintervals,
                                         SetOrderMode::Weak)
                 .has_value();
        c.expect(weak_interval == ws_all_intervals, "weak interval dominance vs interval shifts");
        bool interval = choice::dominates(p, choice::DominanceKind::Interval, v, u);
        bool ss_all_intervals =
            !choice::wmcs_witness_search(p, v, u, choice::DomainFamily::Subintervals,
                                         SetOrderMode::Strong)
                 .has_value();
        c.expect(interval == ss_all_intervals, "interval dominance vs strong interval shifts");
    }
    r.pass = c.ok;
    r.detail = c.ok ? std::to_string(c.checks) + " equivalences" : c.first_failure;
    return r;
}

// ------------------------------------------------------------------- c3 --

CriterionResult criterion_parallel_ridges() {
    CriterionResult r = criterion(3, "parallel ridge shift on the quarter grid");
    Checker c;
    auto inst = instances::ridge_pair(4, Rational(1, 4), Rational(3, 4));
    const Poset& grid = inst.grid;
    c.expect(choice::dominates(grid, choice::DominanceKind::WeakInterval, inst.high, inst.low),
             "weak interval dominance must hold");
    c.expect(!choice::dominates(grid, choice::DominanceKind::Weak, inst.high, inst.low),
             "weak dominance must fail");
    auto w = choice::wmcs_witness_search(grid, inst.high, inst.low,
                                         choice::DomainFamily::Sublattices, SetOrderMode::Weak);
    c.expect(w.has_value(), "a sublattice witness must exist");
    Bitset z = grid.subset_of({"(1/4,0)", "(0,3/4)", "(0,0)", "(1/4,3/4)"});
    Bitset mzu = choice::argmax(grid, z, inst.low);
    Bitset mzv = choice::argmax(grid, z, inst.high);
    c.expect(mzu == grid.subset_of({"(1/4,0)"}), "low table peaks at the low ridge corner");
    c.expect(mzv == grid.subset_of({"(0,3/4)"}), "high table peaks at the high ridge corner");
    c.expect(!order::weak_dominates(grid, mzv, mzu), "four-point maximizers are unordered");
    Bitset mu = choice::argmax(grid, grid.full_set(), inst.low);
    Bitset mv = choice::argmax(grid, grid.full_set(), inst.high);
    c.expect(order::weak_dominates(grid, mv, mu), "full-grid maximizers are weakly ordered");
    c.expect(!order::strong_dominates(grid, mv, mu), "full-grid maximizers not strongly ordered");
    c.expect(!order::is_sublattice(grid, mu) && !order::is_sublattice(grid, mv),
             "ridge maximizer sets are not sublattices");
    r.pass = c.ok;
    r.detail = c.ok ? "exact" : c.first_failure;
    return r;
}

// ------------------------------------------------------------------- c4 --

CriterionResult criterion_kinked_chain() {
    CriterionResult r = criterion(4, "kinked chain profiles: exact optimal sets, weak not strong shift");
    Checker c;
    auto inst = instances::kinked_pair();
    Bitset p_low = pareto::pareto_set(inst.chain, inst.low);
    Bitset p_high = pareto::pareto_set(inst.chain, inst.high);
    c.expect(p_low == Bitset::of(5, {0, 2}), "low optimal set must be {0, 1/2}");
    c.expect(p_high == Bitset::of(5, {1, 4}), "high optimal set must be {1/4, 1}");
    c.expect(pareto::profile_dominates(inst.chain, pareto::ProfileDominance::SingleCrossing,
                                       inst.high, inst.low),
             "single-crossing dominance must hold");
    c.expect(order::weak_dominates(inst.chain, p_high, p_low), "weak shift must hold");
    c.expect(!order::strong_dominates(inst.chain, p_high, p_low), "strong shift must fail");
    r.pass = c.ok;
    r.detail = c.ok ? "exact" : c.first_failure;
    return r;
}

// ------------------------------------------------------------------- c5 --

CriterionResult criterion_pareto_characterizations(std::uint64_t seed, std::size_t instances_n,
                                                   std::size_t chain_trials) {
    CriterionResult r = criterion(5, "optimality membership tests, dominating chains, chain shifts");
    Checker c;
    Rng rng(seed);
    for (std::size_t t = 0; t < instances_n; ++t) {
        Rng sub = rng.fork(t);
        Poset p = gen::random_poset(sub, 7);
        auto u = gen::random_profile(sub, p, 1 + sub.below(3), 4);
        Bitset po = pareto::pareto_set(p, u);
        std::size_t x = sub.below(p.size());
        c.expect(pareto::phi_membership(p, u, x) == po.test(x),
                 "membership test disagrees with brute force");
        std::size_t y = pareto::dominating_chain(p, u, x);
        c.expect(po.test(y), "chain endpoint must be optimal");
        if (!po.test(x)) {
            c.expect(pareto::pareto_dominates(u, y, x), "chain endpoint must dominate the start");
        }
    }
    Rng crng(seed ^ 0xabcdef);
    std::size_t verified = 0;
    for (std::size_t t = 0; t < chain_trials * 4 && verified < chain_trials; ++t) {
        Rng sub = crng.fork(t);
        Poset chain = Poset::chain({"0", "1", "2", "3", "4"});
        auto u = gen::random_profile(sub, chain, 2, 3);
        pareto::UtilityProfile v = u;
        if (sub.coin(0.5)) {
            // add per-agent nondecreasing boosts: preserves single crossing
            for (auto& table : v.agents) {
                Rational boost(0);
                for (std::size_t i = 0; i < table.size(); ++i) {
                    boost += Rational(static_cast<long long>(sub.below(3)));
                    table[i] += boost;
                }
            }
        } else {
            v = gen::random_profile(sub, chain, 2, 3);
        }
        if (!pareto::profile_dominates(chain, pareto::ProfileDominance::SingleCrossing, v, u)) {
            continue;
        }
        ++verified;
        auto verdict =
            pareto::pareto_wmcs_check(chain, pareto::ProfileDominance::SingleCrossing, v, u);
        c.expect(verdict.holds, "single-crossing chain shift must be weak-order monotone");
    }
    c.expect(verified >= chain_trials, "not enough verified chain instances");
    r.pass = c.ok;
    r.detail = c.ok ? std::to_string(c.checks) + " checks" : c.first_failure;
    return r;
}

// ------------------------------------------------------------------- c6 --

CriterionResult criterion_investment_grid() {
    CriterionResult r = criterion(6, "investment grid: cardinal dominance and weak shift at step 1/12");
    Checker c;
    auto low = pareto::investment_profile(12, Rational(1, 4), Rational(1, 4));
    auto high = pareto::investment_profile_on(low.grid, Rational(1, 3), Rational(1, 3));
    c.expect(pareto::profile_dominates(low.grid, pareto::ProfileDominance::IncreasingDifferences,
                                       high, low.profile),
             "increasing-differences dominance must hold");
    c.expect(pareto::supermodular_profile(low.grid, low.profile), "low profile supermodular");
    c.expect(pareto::supermodular_profile(low.grid, high), "high profile supermodular");
    auto verdict = pareto::pareto_wmcs_check(
        low.grid, pareto::ProfileDominance::IncreasingDifferences, high, low.profile);
    c.expect(verdict.holds, "weak shift must hold on the grid");
    Bitset p_low = pareto::pareto_set(low.grid, low.profile);
    Bitset p_high = pareto::pareto_set(low.grid, high);
    c.expect(!order::strong_dominates(low.grid, p_high, p_low), "strong shift must fail");
    r.pass = c.ok;
    r.detail = c.ok ? "exact" : c.first_failure;
    return r;
}

// ------------------------------------------------------------------- c7 --

CriterionResult criterion_fixed_points(std::uint64_t seed, std::size_t existence_trials,
                                       std::size_t lift_trials) {
    CriterionResult r = criterion(7, "fixed-point existence, lifts, and the counterexample gallery");
    Checker c;
    Rng rng(seed);
    std::size_t monotone_cases = 0;
    for (std::size_t t = 0; t < existence_trials; ++t) {
        Rng sub = rng.fork(t);
        Poset p = gen::random_poset(sub, 10);
        auto shape = sub.coin() ? gen::CorrShape::UpClosed : gen::CorrShape::DownClosed;
        auto f = gen::random_correspondence(sub, p, shape);
        auto cls = fp::classify(p, f);
        if (!cls.in_f_plus() && !cls.in_f_minus()) continue;
        ++monotone_cases;
        Bitset fps = fp::fixed_points(p, f);
        c.expect(fps.any(), "monotone correspondence must have a fixed point");
        if (cls.in_f_plus()) {
            c.expect(order::maximal_points(p, fps).any(), "maximal fixed point must exist");
        }
        if (cls.in_f_minus()) {
            c.expect(order::minimal_points(p, fps).any(), "minimal fixed point must exist");
        }
    }
    c.expect(monotone_cases >= existence_trials / 4, "not enough monotone instances");

    Rng lrng(seed ^ 0x5eed);
    std::size_t lifted = 0;
    for (std::size_t t = 0; t < lift_trials * 2 && lifted < lift_trials; ++t) {
        Rng sub = lrng.fork(t);
        Poset p = gen::random_poset(sub, 8);
        auto [low, high] = gen::random_uws_dominating_pair(sub, p);
        Bitset fps = fp::fixed_points(p, low);
        if (fps.none() || !fp::classify(p, high).in_f_plus()) continue;
        std::size_t x = fps.first();
        std::size_t y = fp::cs_lift(p, low, high, x, fp::LiftMode::Upper);
        c.expect(p.leq(x, y) && high.image[y].test(y), "lift must land above on a fixed point");
        ++lifted;
    }
    c.expect(lifted >= lift_trials, "not enough lift instances");

    for (const auto& name : fp::gallery_names()) {
        auto g = fp::gallery(name);
        auto failures = fp::verify_gallery(g);
        c.expect(failures.empty(),
                 failures.empty() ? name : name + ": " + failures.front());
    }
    r.pass = c.ok;
    r.detail = c.ok ? std::to_string(c.checks) + " checks" : c.first_failure;
    return r;
}

// ------------------------------------------------------------------- c8 --

CriterionResult criterion_price_competition() {
    CriterionResult r = criterion(8, "price competition: demand axioms, response monotonicity, shifts");
    Checker c;
    auto grid_11 = [] {
        std::vector<Rational> g;
        for (long long k = 0; k <= 10; ++k) g.push_back(Rational(k));
        return g;
    }();
    auto base = games::pure_bertrand({grid_11, grid_11}, {Rational(2), Rational(2)});
    auto rep = games::validate_demand(base);
    c.expect(rep.own_substitutes && rep.inelastic_shift, "split demand passes both axioms");
    c.expect(games::bertrand_br_monotone(base), "responses are lower weak set monotone");

    auto game = games::bertrand_build(base);
    auto eq = games::nash_set(game);
    c.expect(!eq.empty(), "price game has equilibria");
    for (auto e : eq) {
        auto prof = game.profile_of(e);
        for (std::size_t i = 0; i < 2; ++i) {
            c.expect(base.grids[i][prof[i]] >= base.cost[i].marginal,
                     "no equilibrium price below marginal cost");
        }
    }

    auto costlier = games::pure_bertrand({grid_11, grid_11}, {Rational(3), Rational(3)});
    auto cmp = games::nash_compare(game, games::bertrand_build(costlier), SetOrderMode::Lower);
    c.expect(cmp.holds, "cost increase moves equilibria up in the lower weak order");
    c.expect(!cmp.lifts.empty(), "each shifted equilibrium has a mate below");

    auto rival_costlier = games::pure_bertrand({grid_11, grid_11}, {Rational(2), Rational(4)});
    c.expect(games::bertrand_payoff_compare(base, rival_costlier, 0),
             "unchanged-cost firm's equilibrium profits rise in the lower weak order");
    r.pass = c.ok;
    r.detail = c.ok ? std::to_string(c.checks) + " checks" : c.first_failure;
    return r;
}

// ------------------------------------------------------------------- c9 --

CriterionResult criterion_coordination_game(long long den) {
    CriterionResult r = criterion(9, "two-division coordination game on the grid");
    Checker c;
    games::BeautyContestSpec spec;
    spec.n_players = 2;
    spec.grid_den = den;
    spec.theta_a = Rational(0);
    spec.theta_b = Rational(0);
    auto g = games::beauty_contest_build(spec);
    auto cls = games::classify_wsc(g);
    c.expect(cls.in_g_plus && cls.in_g_minus, "game sits in both complementarity classes");
    auto eq = games::nash_set(g);
    c.expect(!eq.empty(), "equilibria exist");

    games::BeautyContestSpec drifted = spec;
    drifted.theta_a = Rational(1, 4);
    drifted.theta_b = Rational(1, 4);
    auto g2 = games::beauty_contest_build(drifted);
    auto cmp = games::nash_compare(g, g2, SetOrderMode::Weak);
    c.expect(cmp.holds, "drift moves the equilibrium set up in the weak order");
    r.pass = c.ok;
    r.detail = c.ok ? std::to_string(c.checks) + " checks" : c.first_failure;
    return r;
}

// ------------------------------------------------------------------ c10 --

CriterionResult criterion_choice_rule_counterexamples() {
    CriterionResult r = criterion(10, "choice-rule counterexamples behave exactly as stated");
    Checker c;
    using namespace matching;
    {
        Economy e = two_division_budget_economy();
        AgentRef firm{true, 0};
        c.expect(axiom_check(e, firm, Axiom::SenAlpha).holds, "budgeted firm keeps containment");
        c.expect(!axiom_check(e, firm, Axiom::SenBeta).holds, "budgeted firm breaks expansion");
        c.expect(!axiom_check(e, firm, Axiom::WARP).holds, "hence revealed preference fails");
    }
    {
        Economy e = indifferent_single_post_economy();
        AgentRef firm{true, 0};
        c.expect(weak_substitutable(e, firm).holds, "indifferent firm is weakly substitutable");
        c.expect(!strong_substitutable(e, firm).holds, "but not strong set monotone");
        auto stable = stable_set(e);
        c.expect(stable.size() == 3, "exactly the three single hires are stable");
        for (const auto& z : stable) c.expect(z.count() == 1, "stable allocations are singletons");
        c.expect(!worker_optimal_stable(e, stable).has_value(), "no worker-optimal allocation");
    }
    {
        Economy e = cyclic_pairs_rule_economy();
        AgentRef firm{true, 0};
        c.expect(axiom_check(e, firm, Axiom::SenAlpha).holds, "cycling rule keeps containment");
        c.expect(!axiom_check(e, firm, Axiom::WARNI).holds,
                 "cycling rule breaks revealed non-inferiority");
    }
    {
        Economy e = alt_stability_gap_economy();
        Bitset y = Bitset::single(3, 1);
        c.expect(is_alt_stable(e, y), "pairwise-block notion accepts the middle hire");
        c.expect(!is_stable(e, y), "pooled-offer notion rejects it");
    }
    r.pass = c.ok;
    r.detail = c.ok ? std::to_string(c.checks) + " checks" : c.first_failure;
    return r;
}

// ------------------------------------------------------------------ c11 --

CriterionResult criterion_stability_characterization(std::uint64_t seed, std::size_t trials) {
    CriterionResult r = criterion(11, "availability fixed points characterize stable allocations");
    Checker c;
    Rng rng(seed);
    std::size_t used = 0;
    for (std::size_t t = 0; t < trials * 3 && used < trials; ++t) {
        Rng sub = rng.fork(t);
        auto e = gen::random_economy(sub, 6);
        bool hypotheses = true;
        for (auto a : matching::all_agents(e)) {
            hypotheses = hypotheses && matching::axiom_check(e, a, matching::Axiom::SenAlpha).holds &&
                         matching::weak_substitutable(e, a).holds;
        }
        if (!hypotheses) continue;
        ++used;
        c.expect(matching::characterization_check(e), "characterization must hold");
        auto stable = matching::stable_set(e);
        c.expect(!stable.empty(), "a stable allocation must exist");
        Bitset solved = matching::stable_solve(e);
        c.expect(std::binary_search(stable.begin(), stable.end(), solved),
                 "the solver's allocation must be in the stable set");
    }
    c.expect(used >= trials, "not enough admissible economies");
    r.pass = c.ok;
    r.detail = c.ok ? std::to_string(used) + " economies" : c.first_failure;
    return r;
}

// ------------------------------------------------------------------ c12 --

CriterionResult criterion_matching_comparative_statics(std::uint64_t seed) {
    CriterionResult r = criterion(12, "market shifts produce the promised preference-ordered witnesses");
    Checker c;
    using namespace matching;
    {
        auto [base, shifted] = worker_exit_pair();
        auto rep = matching_cs(base, shifted);
        c.expect(rep.per_base.size() == stable_set(base).size(),
                 "worker exit: every base allocation has a witness");
        c.expect(!rep.per_shifted.empty(), "worker exit: reverse witnesses exist");
    }
    {
        auto [base, shifted] = firm_entry_pair();
        auto rep = matching_cs(base, shifted);
        c.expect(rep.per_base.size() == stable_set(base).size(),
                 "firm entry: every base allocation has a witness");
    }
    {
        auto [base, shifted] = budget_relaxation_pair();
        auto rep = matching_cs(base, shifted);
        c.expect(rep.per_base.size() == stable_set(base).size(),
                 "budget relaxation: every base allocation has a witness");
    }
    {
        auto tight = region_cap_market(2);
        auto relaxed = region_cap_market(3);
        c.expect(constraints_equivalence_check(tight), "transfer claim holds at the tight cap");
        c.expect(constraints_equivalence_check(relaxed), "transfer claim holds at the loose cap");
        auto witnesses = constraints_cs(tight, relaxed);
        c.expect(witnesses.size() == weakly_stable_set(tight).size(),
                 "every tight-cap matching has a relaxed-side witness");
        auto mu = weak_stable_solve(tight);
        c.expect(weakly_stable(tight, mu), "solver output is weakly stable");
    }
    {
        // seeded small markets for the transfer claim
        Rng rng(seed ^ 0xc0ffee);
        std::size_t used = 0;
        for (std::size_t t = 0; t < 40 && used < 8; ++t) {
            Rng sub = rng.fork(t);
            ConstraintsMarket m;
            m.n_doctors = 2 + sub.below(2);
            m.n_hospitals = 2 + sub.below(2);
            m.doctor_prefs.resize(m.n_doctors);
            m.hospital_prefs.resize(m.n_hospitals);
            for (std::size_t d = 0; d < m.n_doctors; ++d) {
                for (std::size_t h = 0; h < m.n_hospitals; ++h) {
                    if (sub.coin(0.8)) m.doctor_prefs[d].push_back(h);
                }
                for (std::size_t i = m.doctor_prefs[d].size(); i > 1; --i) {
                    std::swap(m.doctor_prefs[d][i - 1], m.doctor_prefs[d][sub.below(i)]);
                }
            }
            for (std::size_t h = 0; h < m.n_hospitals; ++h) {
                for (std::size_t d = 0; d < m.n_doctors; ++d) {
                    if (sub.coin(0.85)) m.hospital_prefs[h].push_back(d);
                }
                for (std::size_t i = m.hospital_prefs[h].size(); i > 1; --i) {
                    std::swap(m.hospital_prefs[h][i - 1], m.hospital_prefs[h][sub.below(i)]);
                }
                m.capacity.push_back(1 + static_cast<int>(sub.below(2)));
            }
            int cap = 1 + static_cast<int>(sub.below(3));
            // maximal vectors under a total cap, trimmed by capacities
            std::function<void(std::size_t, int, std::vector<int>&)> build =
                [&](std::size_t h, int left, std::vector<int>& acc) {
                    if (h == m.n_hospitals) {
                        m.max_feasible.push_back(acc);
                        return;
                    }
                    int take = std::min(m.capacity[h], left);
                    for (int k = take; k >= 0; --k) {
                        acc.push_back(k);
                        build(h + 1, left - k, acc);
                        acc.pop_back();
                        if (m.max_feasible.size() > 32) return;
                    }
                };
            std::vector<int> acc;
            build(0, cap, acc);
            // prune non-maximal vectors
            std::vector<std::vector<int>> maximal;
            for (const auto& v : m.max_feasible) {
                bool dominated = false;
                for (const auto& w : m.max_feasible) {
                    if (v == w) continue;
                    bool leq = true;
                    for (std::size_t i = 0; i < v.size(); ++i) leq = leq && v[i] <= w[i];
                    if (leq) dominated = true;
                }
                if (!dominated) maximal.push_back(v);
            }
            m.max_feasible = std::move(maximal);
            m.validate();
            ++used;
            c.expect(constraints_equivalence_check(m), "transfer claim on a seeded market");
        }
        c.expect(used >= 8, "not enough seeded markets");
    }
    r.pass = c.ok;
    r.detail = c.ok ? std::to_string(c.checks) + " checks" : c.first_failure;
    return r;
}

// ------------------------------------------------------------------ c13 --

CriterionResult criterion_determinism(std::uint64_t seed) {
    CriterionResult r = criterion(13, "seeded reruns serialize byte-identically");
    auto snapshot = [&] {
        nlohmann::json out;
        auto c1 = criterion_strong_order_decomposition(seed + 1, 5);
        auto c5 = criterion_pareto_characterizations(seed + 5, 50, 10);
        auto c11 = criterion_stability_characterization(seed + 11, 5);
        out["c1"] = {{"pass", c1.pass}, {"detail", c1.detail}};
        out["c5"] = {{"pass", c5.pass}, {"detail", c5.detail}};
        out["c11"] = {{"pass", c11.pass}, {"detail", c11.detail}};
        return out.dump();
    };
    std::string first = snapshot();
    std::string second = snapshot();
    r.pass = first == second;
    r.detail = r.pass ? "identical" : "reruns diverged";
    return r;
}

}  // namespace

std::vector<CriterionResult> run_suite(SuiteKind kind, std::uint64_t seed) {
    const bool quick = kind == SuiteKind::Quick;
    std::vector<std::function<CriterionResult()>> criteria = {
        [&] { return criterion_strong_order_decomposition(seed + 1, quick ? 10 : 50); },
        [&] { return criterion_dominance_characterizations(seed + 2, quick ? 40 : 200); },
        [&] { return criterion_parallel_ridges(); },
        [&] { return criterion_kinked_chain(); },
        [&] { return criterion_pareto_characterizations(seed + 5, quick ? 300 : 2000,
                                                         quick ? 100 : 500); },
        [&] { return criterion_investment_grid(); },
        [&] { return criterion_fixed_points(seed + 7, quick ? 100 : 500, quick ? 100 : 500); },
        [&] { return criterion_price_competition(); },
        [&] { return criterion_coordination_game(quick ? 2 : 4); },
        [&] { return criterion_choice_rule_counterexamples(); },
        [&] { return criterion_stability_characterization(seed + 11, quick ? 25 : 100); },
        [&] { return criterion_matching_comparative_statics(seed + 12); },
        [&] { return criterion_determinism(seed + 13); },
    };
    std::vector<CriterionResult> results;
    results.reserve(criteria.size());
    for (auto& run : criteria) {
        auto start = std::chrono::steady_clock::now();
        CriterionResult res = run();
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        results.push_back(std::move(res));
    }
    return results;
}

nlohmann::json suite_report(SuiteKind kind, std::uint64_t seed,
                            const std::vector<CriterionResult>& results) {
    nlohmann::json out;
    out["tool"] = {{"name", "wmcs"}, {"version", kVersion}};
    out["suite"] = kind == SuiteKind::Quick ? "quick" : "acceptance";
    out["seed"] = seed;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) {
        arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    out["criteria"] = arr;
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    out["pass"] = all;
    return out;
}

}  // namespace wmcs::suite
