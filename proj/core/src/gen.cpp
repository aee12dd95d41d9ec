#include "wmcs/gen.hpp"

#include <algorithm>
#include <set>

namespace wmcs::gen {

namespace {

std::vector<std::string> numbered_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    return labels;
}

}  // namespace

Poset random_poset(Rng& rng, std::size_t max_n) {
    const std::size_t n = 2 + rng.below(max_n - 1);
    std::vector<std::pair<std::string, std::string>> pairs;
    auto labels = numbered_labels(n);
    // edges only from lower to higher rank keep the closure acyclic
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng.coin(0.35)) pairs.emplace_back(labels[i], labels[j]);
        }
    }
    return Poset::from_relation(labels, pairs);
}

Poset random_lattice(Rng& rng, std::size_t max_n) {
    const std::uint64_t pick = rng.below(4);
    if (pick == 0) {
        return Poset::chain(numbered_labels(2 + rng.below(max_n - 1)));
    }
    if (pick == 1) {
        std::size_t a = 2 + rng.below(2);
        std::size_t b = 2 + rng.below(2);
        if (a * b <= max_n) {
            return Poset::product(Poset::chain(numbered_labels(a)),
                                  Poset::chain(numbered_labels(b)));
        }
    }
    // join/meet closure of a random seed inside a Boolean cube; bitwise
    // and/or make the closure a (distributive) lattice
    const std::size_t bits = 3 + rng.below(2);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::set<std::uint64_t> closure;
        std::size_t seeds = 2 + rng.below(3);
        for (std::size_t s = 0; s < seeds; ++s) {
            closure.insert(rng.below(std::uint64_t(1) << bits));
        }
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::uint64_t> cur(closure.begin(), closure.end());
            for (std::size_t i = 0; i < cur.size(); ++i) {
                for (std::size_t j = i + 1; j < cur.size(); ++j) {
                    grew |= closure.insert(cur[i] | cur[j]).second;
                    grew |= closure.insert(cur[i] & cur[j]).second;
                }
            }
        }
        if (closure.size() > max_n) continue;
        std::vector<std::uint64_t> elems(closure.begin(), closure.end());
        std::vector<std::string> labels;
        std::vector<std::pair<std::string, std::string>> pairs;
        for (auto v : elems) labels.push_back("b" + std::to_string(v));
        for (std::size_t i = 0; i < elems.size(); ++i) {
            for (std::size_t j = 0; j < elems.size(); ++j) {
                if (i != j && (elems[i] & elems[j]) == elems[i]) {
                    pairs.emplace_back(labels[i], labels[j]);
                }
            }
        }
        Poset p = Poset::from_relation(labels, pairs);
        if (p.is_lattice()) return p;  // closure in the cube, checked in-ground
    }
    // closure kept overflowing max_n; a chain is always available
    return Poset::chain(numbered_labels(std::max<std::size_t>(2, max_n / 2)));
}

choice::ObjectiveTable random_table(Rng& rng, const Poset& p, int bound) {
    choice::ObjectiveTable t(p.size(), Rational(0));
    for (auto& v : t) v = Rational(rng.range(-bound, bound));
    return t;
}

pareto::UtilityProfile random_profile(Rng& rng, const Poset& p, std::size_t n_agents, int bound) {
    pareto::UtilityProfile u;
    for (std::size_t i = 0; i < n_agents; ++i) u.agents.push_back(random_table(rng, p, bound));
    return u;
}

fp::Correspondence random_correspondence(Rng& rng, const Poset& p, CorrShape shape) {
    const std::size_t n = p.size();
    fp::Correspondence f;
    f.image.assign(n, Bitset(n));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (rng.coin(0.3)) f.image[x].set(y);
        }
        if (f.image[x].none()) f.image[x].set(rng.below(n));
    }
    if (shape == CorrShape::Raw) return f;

    // accumulate along a linear extension: x' >= x implies image inclusion
    // (one direction or the other), which yields the half monotonicity
    std::vector<std::size_t> topo(n);
    for (std::size_t i = 0; i < n; ++i) topo[i] = i;
    std::stable_sort(topo.begin(), topo.end(), [&](std::size_t a, std::size_t b) {
        return p.downset(a).count() < p.downset(b).count();
    });
    if (shape == CorrShape::UpClosed) {
        for (std::size_t r = 0; r < n; ++r) {
            std::size_t x = topo[r];
            for (std::size_t q = 0; q < r; ++q) {
                if (p.lt(topo[q], x)) f.image[x] |= f.image[topo[q]];
            }
        }
    } else {
        for (std::size_t r = n; r-- > 0;) {
            std::size_t x = topo[r];
            for (std::size_t q = r + 1; q < n; ++q) {
                if (p.lt(x, topo[q])) f.image[x] |= f.image[topo[q]];
            }
        }
    }
    return f;
}

DominatingPair random_lws_dominating_pair(Rng& rng, const Poset& p) {
    // dualize, reuse the upper construction, and read the roles back:
    // upper-monotone-above on the dual is lower-monotone-below here
    Poset d = p.dual();
    DominatingPair pair = random_uws_dominating_pair(rng, d);
    return {std::move(pair.high), std::move(pair.low)};
}

JoinShiftPair random_join_shift_pair(Rng& rng, const Poset& lattice) {
    const std::size_t n = lattice.size();
    std::size_t a = rng.below(n);
    std::size_t b = rng.below(n);
    std::size_t c_low = lattice.leq(a, b) ? a : b;
    std::size_t c_high = lattice.leq(a, b) ? b : a;
    if (!lattice.leq(c_low, c_high)) c_high = *lattice.join(c_low, c_high);
    JoinShiftPair out;
    out.c_low = c_low;
    out.c_high = c_high;
    out.low.image.reserve(n);
    out.high.image.reserve(n);
    for (std::size_t x = 0; x < n; ++x) {
        out.low.image.push_back(Bitset::single(n, *lattice.join(x, c_low)));
        out.high.image.push_back(Bitset::single(n, *lattice.join(x, c_high)));
    }
    return out;
}

matching::Economy random_economy(Rng& rng, std::size_t max_contracts) {
    using namespace matching;
    Economy e;
    e.u.n_firms = 1 + rng.below(2);
    e.u.n_workers = 2 + rng.below(2);
    const std::size_t target = 3 + rng.below(max_contracts - 2);
    // at most one contract per firm-worker pair; firms then choose
    // allocation pieces, the regime the stability notions agree on
    std::vector<std::pair<std::size_t, std::size_t>> pool;
    for (std::size_t f = 0; f < e.u.n_firms; ++f) {
        for (std::size_t w = 0; w < e.u.n_workers; ++w) pool.emplace_back(f, w);
    }
    for (std::size_t i = pool.size(); i > 1; --i) {
        std::swap(pool[i - 1], pool[rng.below(i)]);
    }
    const std::size_t n_contracts = std::min(target, pool.size());
    for (std::size_t x = 0; x < n_contracts; ++x) {
        e.u.contracts.push_back({pool[x].first, pool[x].second, "c" + std::to_string(x)});
    }
    e.u.finalize();

    for (std::size_t f = 0; f < e.u.n_firms; ++f) {
        auto own = e.u.firm_contracts[f].indices();
        // random ranking over a random acceptable subset
        std::vector<std::size_t> ranked;
        for (auto x : own) {
            if (rng.coin(0.85)) ranked.push_back(x);
        }
        for (std::size_t i = ranked.size(); i > 1; --i) {
            std::swap(ranked[i - 1], ranked[rng.below(i)]);
        }
        switch (rng.below(3)) {
            case 0:
                e.firm_rule.push_back(
                    ResponsiveRule{ranked, 1 + rng.below(2)});
                break;
            case 1: {
                // two units under a joint budget
                QuasiChoiceRule q;
                q.unit_ranking.assign(2, {});
                for (auto x : ranked) q.unit_ranking[rng.below(2)].push_back(x);
                int budget = 1 + static_cast<int>(rng.below(2));
                for (int a = 0; a <= budget; ++a) {
                    q.max_feasible.push_back({a, budget - a});
                }
                e.firm_rule.push_back(std::move(q));
                break;
            }
            default: {
                // indifferent single post over the acceptable set
                ExplicitTableRule r;
                r.fallback = ExplicitTableRule::Fallback::ChooseNone;
                Bitset acceptable(e.u.size());
                for (auto x : ranked) acceptable.set(x);
                for_each_subset(e.u.firm_contracts[f], [&](const Bitset& offered) {
                    std::vector<Bitset> family;
                    Bitset usable = offered & acceptable;
                    for (std::size_t x = usable.first(); x < usable.size();
                         x = usable.next(x + 1)) {
                        family.push_back(Bitset::single(e.u.size(), x));
                    }
                    family.push_back(Bitset(e.u.size()));  // staying empty is allowed
                    r.entries[offered] = std::move(family);
                    return true;
                });
                e.firm_rule.push_back(std::move(r));
                break;
            }
        }
    }
    for (std::size_t w = 0; w < e.u.n_workers; ++w) {
        auto own = e.u.worker_contracts[w].indices();
        // random strict partial order via levels: dominations only run from
        // higher to lower levels, so the closure stays acyclic
        std::vector<int> level(own.size() + 1);
        for (auto& lv : level) lv = static_cast<int>(rng.below(4));
        level.back() = 1;  // the outside option sits at a middle level
        auto option = [&](std::size_t pos) {
            return pos < own.size() ? own[pos] : WorkerOrderRule::kNull;
        };
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i <= own.size(); ++i) {
            for (std::size_t j = 0; j <= own.size(); ++j) {
                if (level[i] > level[j] && rng.coin(0.6)) {
                    pairs.emplace_back(option(i), option(j));
                }
            }
        }
        e.worker_rule.push_back(WorkerOrderRule::from_pairs(e.u, w, pairs));
    }
    return e;
}

DominatingPair random_uws_dominating_pair(Rng& rng, const Poset& p) {
    const std::size_t n = p.size();
    fp::Correspondence low = random_correspondence(rng, p, CorrShape::UpClosed);
    // plant a fixed point, then re-close so the plant propagates upward
    std::size_t z = rng.below(n);
    low.image[z].set(z);
    for (std::size_t x = 0; x < n; ++x) {
        if (p.lt(z, x)) low.image[x] |= low.image[z];
    }
    fp::Correspondence high = low;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (rng.coin(0.15)) high.image[x].set(y);
        }
    }
    // image inclusion gives the pointwise uws dominance; re-close for uws
    // monotonicity of the enlarged map
    std::vector<std::size_t> topo(n);
    for (std::size_t i = 0; i < n; ++i) topo[i] = i;
    std::stable_sort(topo.begin(), topo.end(), [&](std::size_t a, std::size_t b) {
        return p.downset(a).count() < p.downset(b).count();
    });
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t x = topo[r];
        for (std::size_t q = 0; q < r; ++q) {
            if (p.lt(topo[q], x)) high.image[x] |= high.image[topo[q]];
        }
    }
    return {std::move(low), std::move(high)};
}

}  // namespace wmcs::gen
