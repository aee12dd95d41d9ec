#include "wmcs/scenario.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "wmcs/beauty.hpp"
#include "wmcs/bertrand.hpp"
#include "wmcs/constraints.hpp"
#include "wmcs/gallery.hpp"
#include "wmcs/instances.hpp"
#include "wmcs/version.hpp"

namespace wmcs::scenario {

namespace {

std::string fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

json labels_of(const Poset& p, const Bitset& s) {
    json out = json::array();
    for (std::size_t i = s.first(); i < p.size(); i = s.next(i + 1)) out.push_back(p.label(i));
    return out;
}

Bitset subset_from(const Poset& p, const json& arr) {
    if (!arr.is_array()) throw SchemaError("subset literal must be an array of labels");
    std::vector<std::string> labels;
    for (const auto& l : arr) labels.push_back(l.get<std::string>());
    return p.subset_of(labels);
}

choice::ObjectiveTable table_from(const Poset& p, const json& spec) {
    choice::ObjectiveTable t(p.size(), Rational(0));
    if (spec.is_object()) {
        if (spec.size() != p.size()) throw SchemaError("objective table must value every element");
        for (const auto& [label, value] : spec.items()) {
            auto idx = p.index_of(label);
            if (!idx) throw SchemaError("objective table names unknown element: " + label);
            t[*idx] = Rational::parse(value.get<std::string>());
        }
        return t;
    }
    if (spec.is_array() && spec.size() == p.size()) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            t[i] = Rational::parse(spec[i].get<std::string>());
        }
        return t;
    }
    throw SchemaError("objective table must be a label map or an aligned array");
}

order::SetOrderMode mode_from(const std::string& s) {
    if (s == "uws" || s == "upper") return order::SetOrderMode::Upper;
    if (s == "lws" || s == "lower") return order::SetOrderMode::Lower;
    if (s == "ws" || s == "weak") return order::SetOrderMode::Weak;
    if (s == "ss" || s == "strong") return order::SetOrderMode::Strong;
    throw SchemaError("unknown set order mode: " + s);
}

choice::DominanceKind kind_from(const std::string& s) {
    if (s == "single_crossing") return choice::DominanceKind::SingleCrossing;
    if (s == "ms") return choice::DominanceKind::MS;
    if (s == "weak") return choice::DominanceKind::Weak;
    if (s == "weak_interval") return choice::DominanceKind::WeakInterval;
    if (s == "interval") return choice::DominanceKind::Interval;
    if (s == "qs_interval") return choice::DominanceKind::QSInterval;
    throw SchemaError("unknown dominance kind: " + s);
}

// ---------------------------------------------------------------- order --

json run_order(const json& sc, const Poset& p) {
    json res;
    res["elements"] = p.labels();
    res["is_lattice"] = p.is_lattice();
    std::map<std::string, Bitset> sets;
    if (sc.contains("sets")) {
        for (const auto& [name, arr] : sc.at("sets").items()) {
            sets.emplace(name, subset_from(p, arr));
        }
    }
    for (const auto& [name, s] : sets) {
        json& info = res["sets"][name];
        info["maximal"] = labels_of(p, order::maximal_points(p, s));
        info["minimal"] = labels_of(p, order::minimal_points(p, s));
        try {
            info["sublattice"] = order::is_sublattice(p, s);
        } catch (const MissingJoinError&) {
            info["sublattice"] = nullptr;
        }
    }
    if (sc.contains("compare")) {
        for (const auto& cmp : sc.at("compare")) {
            const Bitset& hi = sets.at(cmp.at("upper").get<std::string>());
            const Bitset& lo = sets.at(cmp.at("lower").get<std::string>());
            json entry;
            entry["upper"] = cmp.at("upper");
            entry["lower"] = cmp.at("lower");
            try {
                order::SetOrderReport r = order::ss_decompose(p, hi, lo);
                entry["uws"] = r.uws;
                entry["lws"] = r.lws;
                entry["ws"] = r.ws;
                entry["ss"] = r.ss;
                entry["union_sublattice"] = r.union_sublattice;
                entry["sandwich"] = r.sandwich;
            } catch (const MissingJoinError& e) {
                entry["error"] = e.what();
            }
            res["compare"].push_back(entry);
        }
    }
    return res;
}

// --------------------------------------------------------------- choice --

json run_choice(const json& sc, const Poset& p) {
    json res;
    std::map<std::string, choice::ObjectiveTable> tables;
    for (const auto& [name, spec] : sc.at("tables").items()) {
        tables.emplace(name, table_from(p, spec));
    }
    if (sc.contains("argmax")) {
        for (const auto& req : sc.at("argmax")) {
            const auto& f = tables.at(req.at("table").get<std::string>());
            Bitset domain =
                req.contains("over") ? subset_from(p, req.at("over")) : p.full_set();
            res["argmax"][req.at("table").get<std::string>()] =
                labels_of(p, choice::argmax(p, domain, f));
        }
    }
    if (sc.contains("dominance")) {
        for (const auto& req : sc.at("dominance")) {
            const std::string kind = req.at("kind").get<std::string>();
            bool d = choice::dominates(p, kind_from(kind), tables.at(req.at("v")),
                                       tables.at(req.at("u")));
            res["dominance"][kind] = d;
        }
    }
    if (sc.contains("witness")) {
        for (const auto& req : sc.at("witness")) {
            auto family = req.value("family", std::string("sublattices")) == "subintervals"
                              ? choice::DomainFamily::Subintervals
                              : choice::DomainFamily::Sublattices;
            auto w = choice::wmcs_witness_search(p, tables.at(req.at("v")),
                                                 tables.at(req.at("u")), family,
                                                 mode_from(req.value("order", std::string("ws"))));
            json entry;
            entry["found"] = w.has_value();
            if (w) {
                entry["domain"] = labels_of(p, w->domain);
                entry["max_u"] = labels_of(p, w->max_u);
                entry["max_v"] = labels_of(p, w->max_v);
            }
            res["witness"].push_back(entry);
        }
    }
    return res;
}

// --------------------------------------------------------------- pareto --

json run_pareto(const json& sc) {
    json res;
    Poset p = [&] {
        if (sc.contains("investment")) {
            return Poset::product(unit_grid_chain(sc.at("investment").at("den").get<long long>()),
                                  unit_grid_chain(sc.at("investment").at("den").get<long long>()));
        }
        return parse_poset(sc.at("poset"));
    }();
    std::map<std::string, pareto::UtilityProfile> profiles;
    if (sc.contains("investment")) {
        const auto& inv = sc.at("investment");
        auto omega = [&](const json& pair) {
            return std::make_pair(Rational::parse(pair.at(0).get<std::string>()),
                                  Rational::parse(pair.at(1).get<std::string>()));
        };
        auto [la, lb] = omega(inv.at("low"));
        profiles.emplace("low", pareto::investment_profile_on(p, la, lb));
        if (inv.contains("high")) {
            auto [ha, hb] = omega(inv.at("high"));
            profiles.emplace("high", pareto::investment_profile_on(p, ha, hb));
        }
    }
    if (sc.contains("profiles")) {
        for (const auto& [name, spec] : sc.at("profiles").items()) {
            pareto::UtilityProfile u;
            for (const auto& t : spec) u.agents.push_back(table_from(p, t));
            profiles.emplace(name, std::move(u));
        }
    }
    for (const auto& [name, u] : profiles) {
        res["pareto_set"][name] = labels_of(p, pareto::pareto_set(p, u));
    }
    if (sc.contains("check")) {
        const auto& req = sc.at("check");
        auto kind = req.at("kind").get<std::string>() == "increasing_differences"
                        ? pareto::ProfileDominance::IncreasingDifferences
                        : pareto::ProfileDominance::SingleCrossing;
        const auto& v = profiles.at(req.at("v").get<std::string>());
        const auto& u = profiles.at(req.at("u").get<std::string>());
        auto verdict = pareto::pareto_wmcs_check(p, kind, v, u);
        res["wmcs"]["holds"] = verdict.holds;
        if (verdict.witness) res["wmcs"]["witness"] = p.label(*verdict.witness);
        res["wmcs"]["strong"] =
            order::strong_dominates(p, pareto::pareto_set(p, v), pareto::pareto_set(p, u));
    }
    return res;
}

// ----------------------------------------------------------- fixedpoint --

json run_fixedpoint(const json& sc, const Poset& p, Report& rep) {
    json res;
    fp::Correspondence f;
    f.image.assign(p.size(), Bitset(p.size()));
    for (const auto& [from, tos] : sc.at("map").items()) {
        auto idx = p.index_of(from);
        if (!idx) throw SchemaError("map names unknown element: " + from);
        f.image[*idx] = subset_from(p, tos);
    }
    f.validate(p);
    fp::MonotoneClass c = fp::classify(p, f);
    res["classify"]["uws"] = c.uws;
    res["classify"]["lws"] = c.lws;
    res["classify"]["in_f_plus"] = c.in_f_plus();
    res["classify"]["in_f_minus"] = c.in_f_minus();
    if (c.ss.has_value()) res["classify"]["ss"] = *c.ss;
    res["x_plus"] = labels_of(p, fp::x_plus(p, f));
    res["x_minus"] = labels_of(p, fp::x_minus(p, f));
    Bitset fps = fp::fixed_points(p, f);
    res["fixed_points"] = labels_of(p, fps);
    res["minimal_fixed_points"] = labels_of(p, order::minimal_points(p, fps));
    res["maximal_fixed_points"] = labels_of(p, order::maximal_points(p, fps));
    if (sc.contains("iterate")) {
        for (const auto& req : sc.at("iterate")) {
            fp::SelectionPolicy pol;
            const std::string policy = req.value("policy", std::string("least"));
            if (policy == "least") pol.kind = fp::SelectionPolicy::Kind::LeastIndex;
            else if (policy == "greatest") pol.kind = fp::SelectionPolicy::Kind::GreatestIndex;
            else if (policy == "minimal") pol.kind = fp::SelectionPolicy::Kind::MinimalPoint;
            else if (policy == "maximal") pol.kind = fp::SelectionPolicy::Kind::MaximalPoint;
            else throw SchemaError("unknown selection policy: " + policy);
            auto dir = req.value("direction", std::string("up")) == "down" ? fp::Direction::Down
                                                                           : fp::Direction::Up;
            auto from = p.index_of(req.at("from").get<std::string>());
            if (!from) throw SchemaError("iterate start is not an element");
            json entry;
            entry["from"] = req.at("from");
            entry["policy"] = policy;
            try {
                auto it = fp::iterate(p, f, *from, pol, dir);
                json trace = json::array();
                for (auto x : it.trace) trace.push_back(p.label(x));
                entry["trace"] = trace;
                entry["dead_end"] = it.dead_end;
                if (it.fixed_point) entry["fixed_point"] = p.label(*it.fixed_point);
            } catch (const NotInStartSetError& e) {
                entry["error"] = e.what();
            }
            res["iterate"].push_back(entry);
            Bitset reach = fp::reachable_fixed_points(
                p, f, *from, dir);
            res["reachable_fixed_points"][req.at("from").get<std::string>()] =
                labels_of(p, reach);
        }
    }
    (void)rep;
    return res;
}

// ----------------------------------------------------------------- game --

games::GameDef game_from(const json& raw) {
    // accept both {"kind": "bertrand", ...} and {"bertrand": {...}}
    json spec = raw;
    if (raw.contains("kind")) {
        spec = json::object();
        json inner = raw;
        inner.erase("kind");
        spec[raw.at("kind").get<std::string>()] = inner;
    }
    if (spec.contains("bertrand")) {
        const auto& b = spec.at("bertrand");
        std::vector<std::vector<Rational>> grids;
        for (const auto& g : b.at("grids")) {
            std::vector<Rational> grid;
            for (const auto& v : g) grid.push_back(Rational::parse(v.get<std::string>()));
            grids.push_back(std::move(grid));
        }
        std::vector<Rational> costs;
        for (const auto& c : b.at("costs")) costs.push_back(Rational::parse(c.get<std::string>()));
        return games::bertrand_build(games::pure_bertrand(std::move(grids), std::move(costs)));
    }
    if (spec.contains("beauty")) {
        const auto& b = spec.at("beauty");
        games::BeautyContestSpec bc;
        bc.n_players = b.value("players", 2);
        bc.grid_den = b.at("den").get<long long>();
        bc.theta_a = Rational::parse(b.at("theta").at(0).get<std::string>());
        bc.theta_b = Rational::parse(b.at("theta").at(1).get<std::string>());
        return games::beauty_contest_build(bc);
    }
    if (spec.contains("explicit")) {
        const auto& ex = spec.at("explicit");
        games::GameDef g;
        for (const auto& ps : ex.at("strategies")) g.strategy.push_back(parse_poset(ps));
        std::size_t i = 0;
        for (const auto& br_spec : ex.at("br")) {
            games::GameDef::ExplicitBR br;
            for (const auto& row : br_spec) {
                br.br.push_back(subset_from(g.strategy[i], row));
            }
            g.rule.emplace_back(std::move(br));
            ++i;
        }
        g.validate();
        return g;
    }
    throw SchemaError("game spec needs bertrand, beauty, or explicit");
}

json game_summary(const games::GameDef& g, Report& rep) {
    json res;
    games::WscReport cls = games::classify_wsc(g);
    res["in_g_plus"] = cls.in_g_plus;
    res["in_g_minus"] = cls.in_g_minus;
    auto eq = games::nash_set(g);
    Poset profiles = games::profile_poset(g);
    json eq_labels = json::array();
    for (auto e : eq) eq_labels.push_back(profiles.label(e));
    res["equilibria"] = eq_labels;
    std::string csv = "profile\n";
    for (auto e : eq) csv += profiles.label(e) + "\n";
    rep.tables.emplace_back("equilibria.csv", csv);
    return res;
}

json run_game(const json& sc, Report& rep) {
    json res;
    games::GameDef g = game_from(sc.at("game"));
    res["base"] = game_summary(g, rep);
    if (sc.contains("compare")) {
        games::GameDef g2 = game_from(sc.at("compare").at("game"));
        res["shifted"] = game_summary(g2, rep);
        auto mode = mode_from(sc.at("compare").value("mode", std::string("ws")));
        auto cmp = games::nash_compare(g, g2, mode);
        res["compare"]["holds"] = cmp.holds;
        res["compare"]["lifts"] = cmp.lifts.size();
    }
    return res;
}

// ------------------------------------------------------------- matching --

matching::ChoiceRule rule_from(const matching::ContractUniverse& u, bool is_firm,
                               std::size_t agent, const json& spec) {
    const std::string kind = spec.at("kind").get<std::string>();
    auto contract_index = [&](const std::string& label) {
        auto idx = u.index_of(label);
        if (!idx) throw SchemaError("rule names unknown contract: " + label);
        return *idx;
    };
    if (kind == "responsive") {
        matching::ResponsiveRule r;
        for (const auto& l : spec.at("list")) r.ranking.push_back(contract_index(l));
        r.capacity = spec.at("capacity").get<std::size_t>();
        return r;
    }
    if (kind == "worker_list") {
        std::vector<std::size_t> best_first;
        for (const auto& l : spec.at("list")) best_first.push_back(contract_index(l));
        return matching::WorkerOrderRule::from_list(u, agent, best_first);
    }
    if (kind == "worker_order") {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (const auto& pr : spec.at("pairs")) {
            auto pos = [&](const json& side) {
                const std::string s = side.get<std::string>();
                return s.empty() ? matching::WorkerOrderRule::kNull : contract_index(s);
            };
            pairs.emplace_back(pos(pr.at(0)), pos(pr.at(1)));
        }
        return matching::WorkerOrderRule::from_pairs(u, agent, pairs);
    }
    if (kind == "multidivision") {
        matching::QuasiChoiceRule r;
        for (const auto& unit : spec.at("units")) {
            std::vector<std::size_t> ranking;
            for (const auto& l : unit) ranking.push_back(contract_index(l));
            r.unit_ranking.push_back(std::move(ranking));
        }
        for (const auto& vec : spec.at("feasible_max")) {
            r.max_feasible.push_back(vec.get<std::vector<int>>());
        }
        return r;
    }
    if (kind == "explicit") {
        matching::ExplicitTableRule r;
        r.fallback = spec.value("default", std::string("all")) == "none"
                         ? matching::ExplicitTableRule::Fallback::ChooseNone
                         : matching::ExplicitTableRule::Fallback::ChooseAll;
        if (spec.contains("entries")) {
            for (const auto& [key, families] : spec.at("entries").items()) {
                Bitset offered(u.size());
                std::istringstream is(key);
                std::string label;
                while (std::getline(is, label, ',')) {
                    if (!label.empty()) offered.set(contract_index(label));
                }
                std::vector<Bitset> family;
                for (const auto& chosen : families) {
                    Bitset b(u.size());
                    for (const auto& l : chosen) b.set(contract_index(l));
                    family.push_back(b);
                }
                r.entries[offered] = std::move(family);
            }
        }
        return r;
    }
    (void)is_firm;
    throw SchemaError("unknown rule kind: " + kind);
}

matching::Economy economy_from(const json& sc) {
    matching::Economy e;
    std::vector<std::string> firms = sc.at("firms").get<std::vector<std::string>>();
    std::vector<std::string> workers = sc.at("workers").get<std::vector<std::string>>();
    e.u.n_firms = firms.size();
    e.u.n_workers = workers.size();
    auto pos_in = [](const std::vector<std::string>& v, const std::string& s) {
        auto it = std::find(v.begin(), v.end(), s);
        if (it == v.end()) throw SchemaError("contract names unknown agent: " + s);
        return static_cast<std::size_t>(it - v.begin());
    };
    for (const auto& c : sc.at("contracts")) {
        matching::Contract contract;
        contract.firm = pos_in(firms, c.at("firm").get<std::string>());
        contract.worker = pos_in(workers, c.at("worker").get<std::string>());
        contract.label = c.value("label", std::string());
        e.u.contracts.push_back(std::move(contract));
    }
    e.u.finalize();
    const auto& rules = sc.at("rules");
    for (std::size_t f = 0; f < e.u.n_firms; ++f) {
        e.firm_rule.push_back(rule_from(e.u, true, f, rules.at(firms[f])));
    }
    for (std::size_t w = 0; w < e.u.n_workers; ++w) {
        e.worker_rule.push_back(rule_from(e.u, false, w, rules.at(workers[w])));
    }
    e.validate();
    return e;
}

json allocation_labels(const matching::Economy& e, const Bitset& z) {
    json out = json::array();
    for (std::size_t x = z.first(); x < z.size(); x = z.next(x + 1)) {
        out.push_back(e.u.contracts[x].label);
    }
    return out;
}

json run_matching(const json& sc, Report& rep) {
    json res;
    matching::Economy e = economy_from(sc);
    std::vector<std::string> firms = sc.at("firms").get<std::vector<std::string>>();
    std::vector<std::string> workers = sc.at("workers").get<std::vector<std::string>>();
    for (auto a : matching::all_agents(e)) {
        const std::string name = a.is_firm ? firms[a.idx] : workers[a.idx];
        json& entry = res["axioms"][name];
        entry["sen_alpha"] = matching::axiom_check(e, a, matching::Axiom::SenAlpha).holds;
        entry["sen_beta"] = matching::axiom_check(e, a, matching::Axiom::SenBeta).holds;
        entry["warp"] = matching::axiom_check(e, a, matching::Axiom::WARP).holds;
        entry["warni"] = matching::axiom_check(e, a, matching::Axiom::WARNI).holds;
        entry["weak_substitutable"] = matching::weak_substitutable(e, a).holds;
    }
    auto stable = matching::stable_set(e);
    json stable_json = json::array();
    std::string csv = "allocation\n";
    for (const auto& z : stable) {
        stable_json.push_back(allocation_labels(e, z));
        std::string row;
        for (const auto& l : allocation_labels(e, z)) {
            row += (row.empty() ? "" : " ") + l.get<std::string>();
        }
        csv += row + "\n";
    }
    res["stable_set"] = stable_json;
    rep.tables.emplace_back("stable_set.csv", csv);
    auto optimal = matching::worker_optimal_stable(e, stable);
    res["worker_optimal_exists"] = optimal.has_value();
    if (sc.contains("allocations")) {
        for (const auto& req : sc.at("allocations").items()) {
            Bitset z(e.u.size());
            for (const auto& l : req.value()) {
                auto idx = e.u.index_of(l.get<std::string>());
                if (!idx) throw SchemaError("allocation names unknown contract");
                z.set(*idx);
            }
            res["allocation"][req.key()]["stable"] = matching::is_stable(e, z);
            res["allocation"][req.key()]["alt_stable"] = matching::is_alt_stable(e, z);
        }
    }
    if (sc.contains("shifted_rules")) {
        json shifted_sc = sc;
        shifted_sc["rules"] = sc.at("shifted_rules");
        matching::Economy shifted = economy_from(shifted_sc);
        auto cs = matching::matching_cs(e, shifted);
        res["cs"]["per_base"] = cs.per_base.size();
        res["cs"]["per_shifted"] = cs.per_shifted.size();
        json wit = json::array();
        for (const auto& w : cs.per_base) {
            wit.push_back({{"base", allocation_labels(e, w.base)},
                           {"shifted", allocation_labels(shifted, w.shifted)}});
        }
        res["cs"]["witnesses"] = wit;
    }
    return res;
}

// ---------------------------------------------------------- constraints --

matching::ConstraintsMarket market_from(const json& sc) {
    matching::ConstraintsMarket m;
    std::vector<std::string> doctors;
    std::vector<std::string> hospitals;
    for (const auto& [d, prefs] : sc.at("doctors").items()) doctors.push_back(d);
    for (const auto& [h, spec] : sc.at("hospitals").items()) hospitals.push_back(h);
    std::sort(doctors.begin(), doctors.end());
    std::sort(hospitals.begin(), hospitals.end());
    auto hospital_pos = [&](const std::string& name) {
        auto it = std::find(hospitals.begin(), hospitals.end(), name);
        if (it == hospitals.end()) throw SchemaError("unknown hospital: " + name);
        return static_cast<std::size_t>(it - hospitals.begin());
    };
    auto doctor_pos = [&](const std::string& name) {
        auto it = std::find(doctors.begin(), doctors.end(), name);
        if (it == doctors.end()) throw SchemaError("unknown doctor: " + name);
        return static_cast<std::size_t>(it - doctors.begin());
    };
    m.n_doctors = doctors.size();
    m.n_hospitals = hospitals.size();
    m.doctor_prefs.resize(m.n_doctors);
    m.hospital_prefs.resize(m.n_hospitals);
    m.capacity.resize(m.n_hospitals);
    for (const auto& [d, prefs] : sc.at("doctors").items()) {
        for (const auto& h : prefs) m.doctor_prefs[doctor_pos(d)].push_back(hospital_pos(h));
    }
    for (const auto& [h, spec] : sc.at("hospitals").items()) {
        for (const auto& d : spec.at("prefs")) {
            m.hospital_prefs[hospital_pos(h)].push_back(doctor_pos(d));
        }
        m.capacity[hospital_pos(h)] = spec.at("capacity").get<int>();
    }
    for (const auto& vec : sc.at("feasible_max")) {
        m.max_feasible.push_back(vec.get<std::vector<int>>());
    }
    m.validate();
    return m;
}

json matching_json(const matching::ConstraintsMarket& m, const matching::DoctorMatching& mu) {
    json out = json::object();
    for (std::size_t d = 0; d < m.n_doctors; ++d) {
        out["d" + std::to_string(d)] = mu[d] < 0 ? json(nullptr) : json("h" + std::to_string(mu[d]));
    }
    return out;
}

json run_constraints(const json& sc, Report& rep) {
    json res;
    matching::ConstraintsMarket m = market_from(sc);
    auto weak = matching::weakly_stable_set(m);
    json arr = json::array();
    std::string csv = "doctor_assignments\n";
    for (const auto& mu : weak) {
        arr.push_back(matching_json(m, mu));
        csv += matching_json(m, mu).dump() + "\n";
    }
    res["weakly_stable"] = arr;
    rep.tables.emplace_back("weakly_stable.csv", csv);
    res["solve"] = matching_json(m, matching::weak_stable_solve(m));
    res["equivalence"] = matching::constraints_equivalence_check(m);
    if (sc.contains("relaxed_feasible_max")) {
        matching::ConstraintsMarket relaxed = m;
        relaxed.max_feasible.clear();
        for (const auto& vec : sc.at("relaxed_feasible_max")) {
            relaxed.max_feasible.push_back(vec.get<std::vector<int>>());
        }
        relaxed.validate();
        auto witnesses = matching::constraints_cs(m, relaxed);
        res["cs"]["witnesses"] = witnesses.size();
        json pairs = json::array();
        for (const auto& w : witnesses) {
            pairs.push_back({{"tight", matching_json(m, w.tight)},
                             {"relaxed", matching_json(relaxed, w.relaxed)}});
        }
        res["cs"]["pairs"] = pairs;
    }
    return res;
}

}  // namespace

Poset parse_poset(const json& spec) {
    std::size_t cap = kDefaultMaxElements;
    if (const char* env = std::getenv("WMCS_MAX_ELEMENTS")) {
        cap = static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
    }
    if (spec.contains("chain")) {
        return Poset::chain(spec.at("chain").get<std::vector<std::string>>());
    }
    if (spec.contains("grid_den")) {
        Poset axis = unit_grid_chain(spec.at("grid_den").get<long long>());
        return Poset::product(axis, axis, cap);
    }
    if (spec.contains("product")) {
        const auto& parts = spec.at("product");
        if (parts.size() < 2) throw SchemaError("product needs at least two parts");
        Poset p = parse_poset(parts.at(0));
        for (std::size_t i = 1; i < parts.size(); ++i) {
            p = Poset::product(p, parse_poset(parts.at(i)), cap);
        }
        return p;
    }
    if (spec.contains("elements")) {
        std::vector<std::pair<std::string, std::string>> pairs;
        if (spec.contains("relation")) {
            for (const auto& pr : spec.at("relation")) {
                pairs.emplace_back(pr.at(0).get<std::string>(), pr.at(1).get<std::string>());
            }
        }
        return Poset::from_relation(spec.at("elements").get<std::vector<std::string>>(), pairs,
                                    cap);
    }
    throw SchemaError("poset literal needs chain, grid_den, product, or elements");
}

bool Report::all_pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const Verdict& v) { return v.pass; });
}

json Report::to_json() const {
    json out;
    out["tool"] = {{"name", "wmcs"}, {"version", kVersion}};
    out["scenario"] = scenario_meta;
    out["results"] = results;
    json vs = json::array();
    for (const auto& v : verdicts) {
        json entry = {{"name", v.name}, {"pass", v.pass}};
        if (!v.detail.empty()) entry["detail"] = v.detail;
        vs.push_back(entry);
    }
    out["verdicts"] = vs;
    return out;
}

Report run_scenario(const json& sc) {
    if (!sc.is_object() || !sc.contains("kind")) {
        throw SchemaError("scenario must be an object with a kind");
    }
    const std::string kind = sc.at("kind").get<std::string>();
    Report rep;
    rep.scenario_meta["kind"] = kind;
    rep.scenario_meta["seed"] = sc.value("seed", 0);
    rep.scenario_meta["caps"] = sc.value("caps", json::object());
    rep.scenario_meta["hash"] = fnv1a(sc.dump());

    if (kind == "order") {
        rep.results = run_order(sc, parse_poset(sc.at("poset")));
    } else if (kind == "choice") {
        rep.results = run_choice(sc, parse_poset(sc.at("poset")));
    } else if (kind == "pareto") {
        rep.results = run_pareto(sc);
    } else if (kind == "fixedpoint") {
        rep.results = run_fixedpoint(sc, parse_poset(sc.at("poset")), rep);
    } else if (kind == "game") {
        rep.results = run_game(sc, rep);
    } else if (kind == "matching") {
        rep.results = run_matching(sc, rep);
    } else if (kind == "constraints") {
        rep.results = run_constraints(sc, rep);
    } else {
        throw SchemaError("unknown scenario kind: " + kind);
    }

    if (sc.contains("expect")) {
        for (const auto& [pointer, expected] : sc.at("expect").items()) {
            Verdict v;
            v.name = pointer;
            try {
                const json& actual = rep.results.at(json::json_pointer(pointer));
                v.pass = actual == expected;
                if (!v.pass) v.detail = "got " + actual.dump() + ", want " + expected.dump();
            } catch (const json::exception&) {
                v.pass = false;
                v.detail = "no result at pointer";
            }
            rep.verdicts.push_back(std::move(v));
        }
    }
    return rep;
}

Report run_scenario_text(const std::string& bytes) {
    json sc;
    try {
        sc = json::parse(bytes);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("scenario is not valid JSON: ") + e.what());
    }
    return run_scenario(sc);
}

}  // namespace wmcs::scenario
