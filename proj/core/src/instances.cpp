#include "wmcs/instances.hpp"

namespace wmcs::instances {

RidgePair ridge_pair(long long den, const Rational& t, const Rational& t_high) {
    Poset axis = unit_grid_chain(den);
    Poset grid = Poset::product(axis, axis);
    choice::ObjectiveTable low(grid.size(), Rational(0));
    choice::ObjectiveTable high(grid.size(), Rational(0));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const std::string& l = grid.label(i);
        auto comma = l.find(',');
        Rational x = Rational::parse(l.substr(1, comma - 1));
        Rational y = Rational::parse(l.substr(comma + 1, l.size() - comma - 2));
        Rational dl = x + y - t;
        Rational dh = x + y - t_high;
        low[i] = -(dl * dl);
        high[i] = -(dh * dh);
    }
    return RidgePair{std::move(grid), std::move(low), std::move(high)};
}

KinkedPair kinked_pair() {
    KinkedPair k{unit_grid_chain(4), {}, {}};
    k.low.agents = {{Rational(2), Rational(7, 4), Rational(5, 2), Rational(9, 4), Rational(2)},
                    {Rational(1), Rational(3, 4), Rational(1, 2), Rational(1, 4), Rational(0)}};
    k.high.agents = {{Rational(0), Rational(1, 4), Rational(1), Rational(5, 4), Rational(3, 2)},
                     {Rational(0), Rational(1, 4), Rational(0), Rational(1, 16), Rational(1, 8)}};
    return k;
}

}  // namespace wmcs::instances

namespace wmcs::matching {

namespace {

// every worker prefers her single contract to staying out
void add_keen_workers(Economy& e) {
    for (std::size_t w = 0; w < e.u.n_workers; ++w) {
        e.worker_rule.push_back(
            WorkerOrderRule::from_list(e.u, w, e.u.worker_contracts[w].indices()));
    }
}

ExplicitTableRule pick_any_one_rule(const ContractUniverse& u, std::size_t firm) {
    ExplicitTableRule r;
    r.fallback = ExplicitTableRule::Fallback::ChooseNone;
    const Bitset own = u.firm_contracts[firm];
    for_each_subset(own, [&](const Bitset& offered) {
        std::vector<Bitset> family;
        for (std::size_t x = offered.first(); x < offered.size(); x = offered.next(x + 1)) {
            family.push_back(Bitset::single(u.size(), x));
        }
        if (family.empty()) family.push_back(Bitset(u.size()));
        r.entries[offered] = std::move(family);
        return true;
    });
    return r;
}

}  // namespace

Economy indifferent_single_post_economy() {
    Economy e;
    e.u.n_firms = 1;
    e.u.n_workers = 3;
    e.u.contracts = {{0, 0, "x"}, {0, 1, "y"}, {0, 2, "z"}};
    e.u.finalize();
    e.firm_rule.push_back(pick_any_one_rule(e.u, 0));
    add_keen_workers(e);
    return e;
}

Economy two_division_budget_economy() {
    Economy e;
    e.u.n_firms = 1;
    e.u.n_workers = 3;
    // contracts: (w,delta), (w',delta'), (w'',delta')
    e.u.contracts = {{0, 0, "wA"}, {0, 1, "wpB"}, {0, 2, "wppB"}};
    e.u.finalize();
    QuasiChoiceRule firm;
    firm.unit_ranking = {{0}, {2, 1}};       // division B prefers w'' to w'
    firm.max_feasible = {{1, 0}, {0, 1}};    // one hire across divisions
    e.firm_rule.push_back(std::move(firm));
    add_keen_workers(e);
    return e;
}

Economy alt_stability_gap_economy() {
    Economy e;
    e.u.n_firms = 1;
    e.u.n_workers = 3;
    e.u.contracts = {{0, 0, "x"}, {0, 1, "y"}, {0, 2, "z"}};
    e.u.finalize();
    ExplicitTableRule firm;
    firm.fallback = ExplicitTableRule::Fallback::ChooseNone;
    auto set_entry = [&](std::initializer_list<std::size_t> offered,
                         std::vector<std::initializer_list<std::size_t>> chosen) {
        Bitset key(3);
        for (auto x : offered) key.set(x);
        std::vector<Bitset> family;
        for (const auto& pick : chosen) {
            Bitset b(3);
            for (auto x : pick) b.set(x);
            family.push_back(b);
        }
        firm.entries[key] = std::move(family);
    };
    set_entry({}, {{}});
    set_entry({0}, {{0}});
    set_entry({1}, {{1}});
    set_entry({2}, {{2}});
    set_entry({0, 1}, {{0}, {1}});
    set_entry({0, 2}, {{0}});
    set_entry({1, 2}, {{1}});
    set_entry({0, 1, 2}, {{0}});
    e.firm_rule.push_back(std::move(firm));
    add_keen_workers(e);
    return e;
}

Economy cyclic_pairs_rule_economy() {
    Economy e;
    e.u.n_firms = 1;
    e.u.n_workers = 6;
    for (std::size_t i = 0; i < 6; ++i) {
        e.u.contracts.push_back({0, i, "x" + std::to_string(i + 1)});
    }
    e.u.finalize();
    ExplicitTableRule firm;
    firm.fallback = ExplicitTableRule::Fallback::ChooseNone;
    auto pair_in = [](const Bitset& s, std::size_t a, std::size_t b) {
        return s.test(a) && s.test(b);
    };
    for_each_subset(e.u.firm_contracts[0], [&](const Bitset& offered) {
        std::vector<Bitset> family;
        // three mutually cycling preferred pairs
        if (pair_in(offered, 0, 1) && !pair_in(offered, 2, 3)) {
            family.push_back(Bitset::of(6, {0, 1}));
        }
        if (pair_in(offered, 2, 3) && !pair_in(offered, 4, 5)) {
            family.push_back(Bitset::of(6, {2, 3}));
        }
        if (pair_in(offered, 4, 5) && !pair_in(offered, 0, 1)) {
            family.push_back(Bitset::of(6, {4, 5}));
        }
        // every offered singleton is always an option
        for (std::size_t x = offered.first(); x < offered.size(); x = offered.next(x + 1)) {
            family.push_back(Bitset::single(6, x));
        }
        if (family.empty()) family.push_back(Bitset(6));
        firm.entries[offered] = std::move(family);
        return true;
    });
    e.firm_rule.push_back(std::move(firm));
    add_keen_workers(e);
    return e;
}

EconomyPair worker_exit_pair() {
    // two firms, two workers, fully connected; responsive single-post firms
    Economy base;
    base.u.n_firms = 2;
    base.u.n_workers = 2;
    base.u.contracts = {{0, 0, "f1w1"}, {0, 1, "f1w2"}, {1, 0, "f2w1"}, {1, 1, "f2w2"}};
    base.u.finalize();
    base.firm_rule.push_back(ResponsiveRule{{0, 1}, 1});  // f1: w1 over w2
    base.firm_rule.push_back(ResponsiveRule{{3, 2}, 1});  // f2: w2 over w1
    base.worker_rule.push_back(WorkerOrderRule::from_list(base.u, 0, {2, 0}));  // w1: f2 first
    base.worker_rule.push_back(WorkerOrderRule::from_list(base.u, 1, {1, 3}));  // w2: f1 first

    Economy shifted = base;
    shifted.worker_rule[1] = WorkerOrderRule::from_list(shifted.u, 1, {});  // w2 leaves
    return {std::move(base), std::move(shifted)};
}

EconomyPair firm_entry_pair() {
    Economy shifted;
    shifted.u.n_firms = 2;
    shifted.u.n_workers = 2;
    shifted.u.contracts = {{0, 0, "f1w1"}, {0, 1, "f1w2"}, {1, 0, "f2w1"}, {1, 1, "f2w2"}};
    shifted.u.finalize();
    shifted.firm_rule.push_back(ResponsiveRule{{0, 1}, 1});
    shifted.firm_rule.push_back(ResponsiveRule{{2, 3}, 2});  // the entrant hires both
    shifted.worker_rule.push_back(WorkerOrderRule::from_list(shifted.u, 0, {2, 0}));
    shifted.worker_rule.push_back(WorkerOrderRule::from_list(shifted.u, 1, {3, 1}));

    Economy base = shifted;
    base.firm_rule[1] = ExplicitTableRule{ExplicitTableRule::Fallback::ChooseNone, {}};
    return {std::move(base), std::move(shifted)};
}

EconomyPair budget_relaxation_pair() {
    Economy base = two_division_budget_economy();
    Economy shifted = base;
    QuasiChoiceRule relaxed;
    relaxed.unit_ranking = {{0}, {2, 1}};
    relaxed.max_feasible = {{1, 1}};  // both divisions may hire
    shifted.firm_rule[0] = std::move(relaxed);
    return {std::move(base), std::move(shifted)};
}

ConstraintsMarket region_cap_market(int total_cap) {
    ConstraintsMarket m;
    m.n_doctors = 3;
    m.n_hospitals = 2;
    m.doctor_prefs = {{0, 1}, {0, 1}, {1, 0}};
    m.hospital_prefs = {{0, 1, 2}, {2, 0, 1}};
    m.capacity = {2, 2};
    for (int a = 0; a <= 2; ++a) {
        for (int b = 0; b <= 2; ++b) {
            if (a + b > total_cap) continue;
            bool maximal = (a == 2 || a + b == total_cap) && (b == 2 || a + b == total_cap);
            if (maximal) m.max_feasible.push_back({a, b});
        }
    }
    m.validate();
    return m;
}

}  // namespace wmcs::matching
