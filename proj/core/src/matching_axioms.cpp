#include <algorithm>
#include <map>

#include "wmcs/matching.hpp"
#include "wmcs/rng.hpp"

namespace wmcs::matching {

namespace {

struct OwnSubsets {
    std::vector<std::size_t> own;  // member contract indices
    std::size_t n_contracts = 0;

    std::size_t width() const { return own.size(); }
    Bitset materialize(std::uint64_t mask) const {
        Bitset s(n_contracts);
        for (std::size_t b = 0; b < own.size(); ++b) {
            if ((mask >> b) & 1) s.set(own[b]);
        }
        return s;
    }
};

bool family_contains(const std::vector<Bitset>& family, const Bitset& member) {
    return std::binary_search(family.begin(), family.end(), member);
}

// cached families over every own-offer subset; exhaustive mode only
struct FamilyCache {
    std::vector<std::vector<Bitset>> choice;
    std::vector<std::vector<Bitset>> rejection;
};

FamilyCache cache_families(const Economy& e, AgentRef a, const OwnSubsets& sub) {
    FamilyCache c;
    const std::uint64_t total = std::uint64_t(1) << sub.width();
    c.choice.reserve(total);
    c.rejection.reserve(total);
    for (std::uint64_t m = 0; m < total; ++m) {
        Bitset offered = sub.materialize(m);
        c.choice.push_back(choice_family(e, a, offered));
        c.rejection.push_back(rejection_family(e, a, offered));
    }
    return c;
}

std::uint64_t mask_of(const OwnSubsets& sub, const Bitset& s) {
    std::uint64_t m = 0;
    for (std::size_t b = 0; b < sub.own.size(); ++b) {
        if (s.test(sub.own[b])) m |= std::uint64_t(1) << b;
    }
    return m;
}

std::string describe(const ContractUniverse& u, const Bitset& s) {
    std::string out = "{";
    bool sep = false;
    for (std::size_t x = s.first(); x < s.size(); x = s.next(x + 1)) {
        if (sep) out += ",";
        out += u.contracts[x].label;
        sep = true;
    }
    return out + "}";
}

OwnSubsets own_subsets(const Economy& e, AgentRef a) {
    OwnSubsets sub;
    sub.own = own_contracts(e, a).indices();
    sub.n_contracts = e.u.size();
    if (sub.width() > 30) {
        throw BudgetExceeded("agent has too many contracts for subset analysis");
    }
    return sub;
}

bool sen_alpha_at(const Economy& e, const FamilyCache& cache, const OwnSubsets& sub,
                  std::uint64_t big, AxiomReport& rep) {
    const Bitset big_set = sub.materialize(big);
    for (const Bitset& y : cache.choice[big]) {
        const std::uint64_t y_mask = mask_of(sub, y);
        // X' ranges over y + subsets of big \ y
        const std::uint64_t free = big & ~y_mask;
        for (std::uint64_t extra = free;; extra = (extra - 1) & free) {
            const std::uint64_t small = y_mask | extra;
            ++rep.checked;
            if (!family_contains(cache.choice[small], y)) {
                rep.holds = false;
                rep.witness = describe(e.u, y) + " chosen from " + describe(e.u, big_set) +
                              " but not from " + describe(e.u, sub.materialize(small));
                return false;
            }
            if (extra == 0) break;
        }
    }
    return true;
}

bool sen_beta_at(const Economy& e, const FamilyCache& cache, const OwnSubsets& sub,
                 std::uint64_t big, AxiomReport& rep) {
    // X' over subsets of big
    for (std::uint64_t small = big;; small = (small - 1) & big) {
        const auto& fam_small = cache.choice[small];
        const auto& fam_big = cache.choice[big];
        bool some_survives = false;
        for (const Bitset& y : fam_small) {
            if (family_contains(fam_big, y)) {
                some_survives = true;
                break;
            }
        }
        ++rep.checked;
        if (some_survives) {
            for (const Bitset& y : fam_small) {
                if (!family_contains(fam_big, y)) {
                    rep.holds = false;
                    rep.witness = describe(e.u, y) + " optimal in " +
                                  describe(e.u, sub.materialize(small)) +
                                  " but dropped from " + describe(e.u, sub.materialize(big));
                    return false;
                }
            }
        }
        if (small == 0) break;
    }
    return true;
}

bool warni_at(const Economy& e, const FamilyCache& cache, const OwnSubsets& sub,
              std::uint64_t offer, AxiomReport& rep) {
    // chosen_at: for each candidate Z, the offers where Z is chosen
    // (built lazily per offer scan below from the full cache)
    const std::uint64_t total = std::uint64_t(1) << sub.width();
    for (std::uint64_t z_mask = offer;; z_mask = (z_mask - 1) & offer) {
        const Bitset z = sub.materialize(z_mask);
        bool hypothesis = true;
        for (const Bitset& y : cache.choice[offer]) {
            const std::uint64_t y_mask = mask_of(sub, y);
            bool exists = false;
            for (std::uint64_t sup = 0; sup < total && !exists; ++sup) {
                exists = (sup & y_mask) == y_mask && family_contains(cache.choice[sup], z);
            }
            if (!exists) {
                hypothesis = false;
                break;
            }
        }
        ++rep.checked;
        if (hypothesis && !family_contains(cache.choice[offer], z)) {
            rep.holds = false;
            rep.witness = describe(e.u, z) + " revealed non-inferior over " +
                          describe(e.u, sub.materialize(offer)) + " but not chosen";
            return false;
        }
        if (z_mask == 0) break;
    }
    return true;
}

bool rejection_pair_monotone(const Economy& e, const FamilyCache& cache, const OwnSubsets& sub,
                             std::uint64_t small, std::uint64_t big, AxiomReport& rep) {
    const auto& r_small = cache.rejection[small];
    const auto& r_big = cache.rejection[big];
    ++rep.checked;
    for (const Bitset& z : r_small) {
        bool mate = false;
        for (const Bitset& zb : r_big) {
            if (z.is_subset_of(zb)) {
                mate = true;
                break;
            }
        }
        if (!mate) {
            rep.holds = false;
            rep.witness = "rejection " + describe(e.u, z) + " from " +
                          describe(e.u, sub.materialize(small)) + " has no superset mate at " +
                          describe(e.u, sub.materialize(big));
            return false;
        }
    }
    for (const Bitset& zb : r_big) {
        bool mate = false;
        for (const Bitset& z : r_small) {
            if (z.is_subset_of(zb)) {
                mate = true;
                break;
            }
        }
        if (!mate) {
            rep.holds = false;
            rep.witness = "rejection " + describe(e.u, zb) + " from " +
                          describe(e.u, sub.materialize(big)) + " has no subset mate at " +
                          describe(e.u, sub.materialize(small));
            return false;
        }
    }
    return true;
}

}  // namespace

AxiomReport axiom_check(const Economy& e, AgentRef a, Axiom axiom, std::size_t budget,
                        std::size_t exhaustive_limit, std::uint64_t seed) {
    e.validate();
    if (axiom == Axiom::WARP) {
        AxiomReport alpha = axiom_check(e, a, Axiom::SenAlpha, budget, exhaustive_limit, seed);
        if (!alpha.holds) return alpha;
        AxiomReport beta = axiom_check(e, a, Axiom::SenBeta, budget, exhaustive_limit, seed);
        beta.checked += alpha.checked;
        beta.exhaustive = beta.exhaustive && alpha.exhaustive;
        return beta;
    }
    OwnSubsets sub = own_subsets(e, a);
    AxiomReport rep;
    if (sub.width() <= exhaustive_limit) {
        FamilyCache cache = cache_families(e, a, sub);
        const std::uint64_t total = std::uint64_t(1) << sub.width();
        for (std::uint64_t offer = 0; offer < total; ++offer) {
            bool ok = true;
            switch (axiom) {
                case Axiom::SenAlpha: ok = sen_alpha_at(e, cache, sub, offer, rep); break;
                case Axiom::SenBeta: ok = sen_beta_at(e, cache, sub, offer, rep); break;
                case Axiom::WARNI: ok = warni_at(e, cache, sub, offer, rep); break;
                case Axiom::WARP: break;  // handled above
            }
            if (!ok) return rep;
            if (rep.checked > budget) {
                rep.exhaustive = false;
                return rep;
            }
        }
        return rep;
    }
    // wide agents: seeded sampling over nested subset pairs
    rep.exhaustive = false;
    Rng rng(seed);
    const std::size_t trials = std::min<std::size_t>(budget, 20000);
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint64_t big = rng.next_u64() & ((std::uint64_t(1) << sub.width()) - 1);
        Bitset big_set = sub.materialize(big);
        auto fam_big = choice_family(e, a, big_set);
        std::uint64_t small = rng.next_u64() & big;
        Bitset small_set = sub.materialize(small);
        auto fam_small = choice_family(e, a, small_set);
        std::sort(fam_big.begin(), fam_big.end());
        std::sort(fam_small.begin(), fam_small.end());
        ++rep.checked;
        if (axiom == Axiom::SenAlpha) {
            for (const Bitset& y : fam_big) {
                if (y.is_subset_of(small_set) && !family_contains(fam_small, y)) {
                    rep.holds = false;
                    rep.witness = describe(e.u, y) + " fails containment under sampling";
                    return rep;
                }
            }
        } else if (axiom == Axiom::SenBeta) {
            bool survives = false;
            for (const Bitset& y : fam_small) survives = survives || family_contains(fam_big, y);
            if (survives) {
                for (const Bitset& y : fam_small) {
                    if (!family_contains(fam_big, y)) {
                        rep.holds = false;
                        rep.witness = describe(e.u, y) + " fails expansion under sampling";
                        return rep;
                    }
                }
            }
        } else {
            // WARNI sampling needs the existential over supersets; use the
            // chosen sets themselves as candidate Z
            for (const Bitset& z : fam_small) {
                bool hypothesis = true;
                for (const Bitset& y : fam_big) {
                    Bitset sup = y | z;
                    auto fam_sup = choice_family(e, a, sup);
                    std::sort(fam_sup.begin(), fam_sup.end());
                    if (!family_contains(fam_sup, z)) {
                        hypothesis = false;
                        break;
                    }
                }
                if (hypothesis && z.is_subset_of(big_set) && !family_contains(fam_big, z)) {
                    rep.holds = false;
                    rep.witness = describe(e.u, z) + " fails revealed non-inferiority (sampled)";
                    return rep;
                }
            }
        }
    }
    return rep;
}

AxiomReport weak_substitutable(const Economy& e, AgentRef a, std::size_t budget,
                               std::size_t exhaustive_limit, std::uint64_t seed) {
    e.validate();
    OwnSubsets sub = own_subsets(e, a);
    AxiomReport rep;
    if (sub.width() <= exhaustive_limit) {
        FamilyCache cache = cache_families(e, a, sub);
        const std::uint64_t total = std::uint64_t(1) << sub.width();
        for (std::uint64_t big = 0; big < total; ++big) {
            for (std::uint64_t small = big;; small = (small - 1) & big) {
                if (!rejection_pair_monotone(e, cache, sub, small, big, rep)) return rep;
                if (rep.checked > budget) {
                    rep.exhaustive = false;
                    return rep;
                }
                if (small == 0) break;
            }
        }
        return rep;
    }
    rep.exhaustive = false;
    Rng rng(seed);
    const std::size_t trials = std::min<std::size_t>(budget, 20000);
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint64_t big = rng.next_u64() & ((std::uint64_t(1) << sub.width()) - 1);
        std::uint64_t small = rng.next_u64() & big;
        auto r_small = rejection_family(e, a, sub.materialize(small));
        auto r_big = rejection_family(e, a, sub.materialize(big));
        ++rep.checked;
        auto has_superset_mate = [&](const Bitset& z) {
            for (const Bitset& zb : r_big) {
                if (z.is_subset_of(zb)) return true;
            }
            return false;
        };
        auto has_subset_mate = [&](const Bitset& zb) {
            for (const Bitset& z : r_small) {
                if (z.is_subset_of(zb)) return true;
            }
            return false;
        };
        for (const Bitset& z : r_small) {
            if (!has_superset_mate(z)) {
                rep.holds = false;
                rep.witness = "rejection " + describe(e.u, z) + " loses its superset mate";
                return rep;
            }
        }
        for (const Bitset& zb : r_big) {
            if (!has_subset_mate(zb)) {
                rep.holds = false;
                rep.witness = "rejection " + describe(e.u, zb) + " has no subset mate";
                return rep;
            }
        }
    }
    return rep;
}

AxiomReport strong_substitutable(const Economy& e, AgentRef a, std::size_t budget,
                                 std::size_t exhaustive_limit) {
    e.validate();
    OwnSubsets sub = own_subsets(e, a);
    AxiomReport rep;
    if (sub.width() > exhaustive_limit) {
        throw BudgetExceeded("strong substitutability check is exhaustive-only");
    }
    FamilyCache cache = cache_families(e, a, sub);
    const std::uint64_t total = std::uint64_t(1) << sub.width();
    for (std::uint64_t big = 0; big < total; ++big) {
        for (std::uint64_t small = big;; small = (small - 1) & big) {
            const auto& r_small = cache.rejection[small];
            const auto& r_big = cache.rejection[big];
            ++rep.checked;
            for (const Bitset& z : r_small) {
                for (const Bitset& zb : r_big) {
                    if (!family_contains(r_big, z | zb) || !family_contains(r_small, z & zb)) {
                        rep.holds = false;
                        rep.witness = "cross pair " + describe(e.u, z) + ", " +
                                      describe(e.u, zb) + " breaks the strong order between " +
                                      describe(e.u, sub.materialize(small)) + " and " +
                                      describe(e.u, sub.materialize(big));
                        return rep;
                    }
                }
            }
            if (rep.checked > budget) {
                rep.exhaustive = false;
                return rep;
            }
            if (small == 0) break;
        }
    }
    return rep;
}

AxiomReport more_permissive(const Economy& ea, const Economy& eb, AgentRef a, std::size_t budget,
                            std::size_t exhaustive_limit, std::uint64_t seed) {
    ea.validate();
    eb.validate();
    if (ea.u.size() != eb.u.size()) throw SchemaError("economies must share the contract set");
    OwnSubsets sub = own_subsets(ea, a);
    AxiomReport rep;
    const bool exhaustive = sub.width() <= exhaustive_limit;
    rep.exhaustive = exhaustive;
    Rng rng(seed);
    const std::uint64_t total = std::uint64_t(1) << std::min<std::size_t>(sub.width(), 30);
    const std::size_t trials = exhaustive ? total : std::min<std::size_t>(budget, 20000);
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t offer_mask =
            exhaustive ? t : (rng.next_u64() & ((std::uint64_t(1) << sub.width()) - 1));
        const Bitset offer = sub.materialize(offer_mask);
        auto r_a = rejection_family(ea, a, offer);
        auto r_b = rejection_family(eb, a, offer);
        ++rep.checked;
        // R_A <=ws R_B on the inclusion order: every A-rejection has a
        // superset mate in B, every B-rejection a subset mate in A
        for (const Bitset& z : r_a) {
            bool mate = false;
            for (const Bitset& zb : r_b) mate = mate || z.is_subset_of(zb);
            if (!mate) {
                rep.holds = false;
                rep.witness = "rejection " + describe(ea.u, z) + " at offer " +
                              describe(ea.u, offer) + " has no superset mate";
                return rep;
            }
        }
        for (const Bitset& zb : r_b) {
            bool mate = false;
            for (const Bitset& z : r_a) mate = mate || z.is_subset_of(zb);
            if (!mate) {
                rep.holds = false;
                rep.witness = "rejection " + describe(eb.u, zb) + " at offer " +
                              describe(eb.u, offer) + " has no subset mate";
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace wmcs::matching
