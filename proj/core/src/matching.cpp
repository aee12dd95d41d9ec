#include "wmcs/matching.hpp"

#include <algorithm>
#include <set>

namespace wmcs::matching {

void ContractUniverse::finalize() {
    firm_contracts.assign(n_firms, Bitset(size()));
    worker_contracts.assign(n_workers, Bitset(size()));
    std::set<std::string> seen;
    for (std::size_t x = 0; x < size(); ++x) {
        const Contract& c = contracts[x];
        if (c.firm >= n_firms || c.worker >= n_workers) {
            throw SchemaError("contract references unknown firm or worker");
        }
        if (c.label.empty()) contracts[x].label = "x" + std::to_string(x);
        if (!seen.insert(contracts[x].label).second) {
            throw DuplicateLabelError("duplicate contract label: " + contracts[x].label);
        }
        firm_contracts[c.firm].set(x);
        worker_contracts[c.worker].set(x);
    }
}

std::optional<std::size_t> ContractUniverse::index_of(const std::string& label) const {
    for (std::size_t x = 0; x < size(); ++x) {
        if (contracts[x].label == label) return x;
    }
    return std::nullopt;
}

WorkerOrderRule WorkerOrderRule::from_pairs(
    const ContractUniverse& u, std::size_t worker,
    const std::vector<std::pair<std::size_t, std::size_t>>& sp) {
    WorkerOrderRule r;
    r.own = u.worker_contracts[worker].indices();
    const std::size_t k = r.own.size();
    auto pos_of = [&](std::size_t contract) -> std::size_t {
        if (contract == kNull) return k;
        for (std::size_t i = 0; i < k; ++i) {
            if (r.own[i] == contract) return i;
        }
        throw SchemaError("preference pair references a contract of another worker");
    };
    r.dominates.assign(k + 1, Bitset(k + 1));
    for (const auto& [better, worse] : sp) {
        r.dominates[pos_of(better)].set(pos_of(worse));
    }
    // transitive closure, then irreflexivity check
    for (std::size_t m = 0; m <= k; ++m) {
        for (std::size_t i = 0; i <= k; ++i) {
            if (r.dominates[i].test(m)) r.dominates[i] |= r.dominates[m];
        }
    }
    for (std::size_t i = 0; i <= k; ++i) {
        if (r.dominates[i].test(i)) {
            throw CycleError("worker preference relation has a cycle");
        }
    }
    return r;
}

WorkerOrderRule WorkerOrderRule::from_list(const ContractUniverse& u, std::size_t worker,
                                           const std::vector<std::size_t>& best_first) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < best_first.size(); ++i) {
        for (std::size_t j = i + 1; j < best_first.size(); ++j) {
            pairs.emplace_back(best_first[i], best_first[j]);
        }
        pairs.emplace_back(best_first[i], kNull);  // listed means acceptable
    }
    // the outside option beats everything unlisted
    Bitset listed(u.size());
    for (auto x : best_first) listed.set(x);
    for (std::size_t x = u.worker_contracts[worker].first(); x < u.size();
         x = u.worker_contracts[worker].next(x + 1)) {
        if (!listed.test(x)) pairs.emplace_back(kNull, x);
    }
    return from_pairs(u, worker, pairs);
}

bool QuasiChoiceRule::feasible(const std::vector<int>& w) const {
    for (const auto& m : max_feasible) {
        bool below = true;
        for (std::size_t d = 0; d < w.size() && below; ++d) below = w[d] <= m[d];
        if (below) return true;
    }
    return false;
}

std::vector<std::vector<int>> QuasiChoiceRule::quasi_choice(const std::vector<int>& w) const {
    // candidates are componentwise minima against maximal feasible vectors;
    // keep the maximal ones
    std::vector<std::vector<int>> cands;
    for (const auto& m : max_feasible) {
        std::vector<int> c(w.size());
        for (std::size_t d = 0; d < w.size(); ++d) c[d] = std::min(w[d], m[d]);
        cands.push_back(std::move(c));
    }
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < cands.size() && !dominated; ++j) {
            if (i == j || cands[j] == cands[i]) continue;
            bool geq = true;
            for (std::size_t d = 0; d < w.size() && geq; ++d) geq = cands[j][d] >= cands[i][d];
            dominated = geq;
        }
        if (!dominated && std::find(out.begin(), out.end(), cands[i]) == out.end()) {
            out.push_back(cands[i]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void Economy::validate() const {
    if (firm_rule.size() != u.n_firms || worker_rule.size() != u.n_workers) {
        throw SchemaError("economy needs one rule per agent");
    }
}

std::vector<AgentRef> all_agents(const Economy& e) {
    std::vector<AgentRef> out;
    for (std::size_t f = 0; f < e.u.n_firms; ++f) out.push_back({true, f});
    for (std::size_t w = 0; w < e.u.n_workers; ++w) out.push_back({false, w});
    return out;
}

const ChoiceRule& rule_of(const Economy& e, AgentRef a) {
    return a.is_firm ? e.firm_rule[a.idx] : e.worker_rule[a.idx];
}

const Bitset& own_contracts(const Economy& e, AgentRef a) {
    return a.is_firm ? e.u.firm_contracts[a.idx] : e.u.worker_contracts[a.idx];
}

namespace {

std::vector<Bitset> canonical(std::vector<Bitset> family) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    return family;
}

std::vector<Bitset> explicit_choice(const ExplicitTableRule& r, const Bitset& offered_own) {
    auto it = r.entries.find(offered_own);
    if (it != r.entries.end()) {
        for (const auto& y : it->second) {
            if (!y.is_subset_of(offered_own)) {
                throw RuleDomainError("explicit table chooses outside the offer set");
            }
        }
        if (it->second.empty()) throw RuleDomainError("explicit table entry has empty family");
        return canonical(it->second);
    }
    if (r.fallback == ExplicitTableRule::Fallback::ChooseAll) return {offered_own};
    return {Bitset(offered_own.size())};
}

std::vector<Bitset> worker_choice(const WorkerOrderRule& r, const Bitset& offered_own,
                                  std::size_t n_contracts) {
    const std::size_t k = r.own.size();
    // options: offered own contracts plus the outside option (position k)
    std::vector<std::size_t> options;
    for (std::size_t i = 0; i < k; ++i) {
        if (offered_own.test(r.own[i])) options.push_back(i);
    }
    options.push_back(k);
    std::vector<Bitset> family;
    for (std::size_t cand : options) {
        bool dominated = false;
        for (std::size_t other : options) {
            if (other != cand && r.dominates[other].test(cand)) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        Bitset chosen(n_contracts);
        if (cand < k) chosen.set(r.own[cand]);
        family.push_back(std::move(chosen));
    }
    return canonical(std::move(family));
}

std::vector<Bitset> responsive_choice(const ResponsiveRule& r, const Bitset& offered_own,
                                      std::size_t n_contracts) {
    Bitset chosen(n_contracts);
    std::size_t taken = 0;
    for (std::size_t x : r.ranking) {
        if (taken == r.capacity) break;
        if (offered_own.test(x)) {
            chosen.set(x);
            ++taken;
        }
    }
    return {chosen};
}

std::vector<Bitset> quasi_choice_sets(const QuasiChoiceRule& r, const Bitset& offered_own,
                                      std::size_t n_contracts) {
    const std::size_t units = r.unit_ranking.size();
    std::vector<int> counts(units, 0);
    for (std::size_t d = 0; d < units; ++d) {
        for (std::size_t x : r.unit_ranking[d]) {
            if (offered_own.test(x)) ++counts[d];
        }
    }
    std::vector<Bitset> family;
    for (const auto& w : r.quasi_choice(counts)) {
        Bitset chosen(n_contracts);
        for (std::size_t d = 0; d < units; ++d) {
            int left = w[d];
            for (std::size_t x : r.unit_ranking[d]) {
                if (left == 0) break;
                if (offered_own.test(x)) {
                    chosen.set(x);
                    --left;
                }
            }
        }
        family.push_back(std::move(chosen));
    }
    return canonical(std::move(family));
}

}  // namespace

std::vector<Bitset> choice_family(const Economy& e, AgentRef a, const Bitset& offered) {
    const Bitset offered_own = offered & own_contracts(e, a);
    const ChoiceRule& r = rule_of(e, a);
    const std::size_t n = e.u.size();
    if (const auto* ex = std::get_if<ExplicitTableRule>(&r)) return explicit_choice(*ex, offered_own);
    if (const auto* wo = std::get_if<WorkerOrderRule>(&r)) return worker_choice(*wo, offered_own, n);
    if (const auto* re = std::get_if<ResponsiveRule>(&r)) return responsive_choice(*re, offered_own, n);
    return quasi_choice_sets(std::get<QuasiChoiceRule>(r), offered_own, n);
}

std::vector<Bitset> rejection_family(const Economy& e, AgentRef a, const Bitset& offered) {
    const Bitset offered_own = offered & own_contracts(e, a);
    std::vector<Bitset> family;
    for (const Bitset& y : choice_family(e, a, offered)) family.push_back(offered_own - y);
    return canonical(std::move(family));
}

}  // namespace wmcs::matching
