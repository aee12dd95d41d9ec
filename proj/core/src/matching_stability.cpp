#include <algorithm>
#include <functional>

#include "wmcs/matching.hpp"

namespace wmcs::matching {

namespace {

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

bool family_contains_sorted(const std::vector<Bitset>& family, const Bitset& member) {
    return std::binary_search(family.begin(), family.end(), member);
}

}  // namespace

bool blair_weakly_prefers(const Economy& e, AgentRef a, const Bitset& za, const Bitset& zb) {
    const Bitset own = own_contracts(e, a);
    const Bitset pool = (za | zb) & own;
    return family_contains_sorted(choice_family(e, a, pool), za & own);
}

bool blair_strictly_prefers(const Economy& e, AgentRef a, const Bitset& za, const Bitset& zb) {
    return blair_weakly_prefers(e, a, za, zb) && !blair_weakly_prefers(e, a, zb, za);
}

bool is_allocation(const Economy& e, const Bitset& z) {
    for (std::size_t w = 0; w < e.u.n_workers; ++w) {
        if ((z & e.u.worker_contracts[w]).count() > 1) return false;
    }
    return true;
}

Bitset upper_contour(const Economy& e, const Bitset& z) {
    Bitset out(e.u.size());
    for (std::size_t x = 0; x < e.u.size(); ++x) {
        AgentRef w{false, e.u.contracts[x].worker};
        Bitset single = Bitset::single(e.u.size(), x);
        if (blair_strictly_prefers(e, w, single, z)) out.set(x);
    }
    return out;
}

namespace {

bool individually_rational(const Economy& e, const Bitset& z) {
    for (AgentRef a : all_agents(e)) {
        if (!family_contains_sorted(choice_family(e, a, z), z & own_contracts(e, a))) {
            return false;
        }
    }
    return true;
}

void require_allocation(const Economy& e, const Bitset& z) {
    if (!is_allocation(e, z)) {
        throw AllocationError("a worker holds two contracts in " + describe(e.u, z));
    }
}

}  // namespace

bool is_stable(const Economy& e, const Bitset& z) {
    e.validate();
    require_allocation(e, z);
    if (!individually_rational(e, z)) return false;
    const Bitset pool = z | upper_contour(e, z);
    for (std::size_t f = 0; f < e.u.n_firms; ++f) {
        AgentRef fa{true, f};
        if (!family_contains_sorted(choice_family(e, fa, pool), z & e.u.firm_contracts[f])) {
            return false;
        }
    }
    return true;
}

bool is_alt_stable(const Economy& e, const Bitset& z) {
    e.validate();
    require_allocation(e, z);
    if (!individually_rational(e, z)) return false;
    for (std::size_t f = 0; f < e.u.n_firms; ++f) {
        AgentRef fa{true, f};
        const Bitset zf = z & e.u.firm_contracts[f];
        bool blocked = false;
        for_each_subset(e.u.firm_contracts[f], [&](const Bitset& yf) {
            if (!is_allocation(e, yf)) return true;
            // every newly demanded contract must strictly please its worker
            for (std::size_t x = (yf - zf).first(); x < e.u.size(); x = (yf - zf).next(x + 1)) {
                AgentRef w{false, e.u.contracts[x].worker};
                if (!blair_strictly_prefers(e, w, Bitset::single(e.u.size(), x), z)) return true;
            }
            if (blair_strictly_prefers(e, fa, yf, z)) {
                blocked = true;
                return false;
            }
            return true;
        });
        if (blocked) return false;
    }
    return true;
}

bool tstate_leq(const TState& a, const TState& b) {
    return a.avail_firms.is_subset_of(b.avail_firms) &&
           b.avail_workers.is_subset_of(a.avail_workers);
}

namespace {

// per-agent rejection selections whose union is X \ target
bool side_contains(const Economy& e, bool firms, const Bitset& avail, const Bitset& target) {
    const Bitset rejected = e.u.all() - target;
    const std::size_t agents = firms ? e.u.n_firms : e.u.n_workers;
    for (std::size_t i = 0; i < agents; ++i) {
        AgentRef a{firms, i};
        const Bitset piece = rejected & own_contracts(e, a);
        if (!family_contains_sorted(rejection_family(e, a, avail), piece)) return false;
    }
    return true;
}

}  // namespace

bool t_contains(const Economy& e, const TState& s, const TState& candidate) {
    return side_contains(e, false, s.avail_workers, candidate.avail_firms) &&
           side_contains(e, true, s.avail_firms, candidate.avail_workers);
}

std::vector<TState> t_apply(const Economy& e, const TState& s, std::size_t cap) {
    e.validate();
    // component families: all worker-side rejections from X'' and all
    // firm-side rejections from X'
    auto side_images = [&](bool firms, const Bitset& avail) {
        std::vector<Bitset> acc{e.u.none()};
        const std::size_t agents = firms ? e.u.n_firms : e.u.n_workers;
        for (std::size_t i = 0; i < agents; ++i) {
            auto fam = rejection_family(e, {firms, i}, avail);
            std::vector<Bitset> next;
            next.reserve(acc.size() * fam.size());
            for (const Bitset& base : acc) {
                for (const Bitset& piece : fam) next.push_back(base | piece);
            }
            if (next.size() > cap) throw SizeLimitError("availability image family exceeds cap");
            acc = std::move(next);
        }
        for (Bitset& r : acc) r = e.u.all() - r;  // complement of the union of rejections
        std::sort(acc.begin(), acc.end());
        acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
        return acc;
    };
    std::vector<Bitset> firm_avail = side_images(false, s.avail_workers);
    std::vector<Bitset> worker_avail = side_images(true, s.avail_firms);
    if (firm_avail.size() * worker_avail.size() > cap) {
        throw SizeLimitError("availability image family exceeds cap");
    }
    std::vector<TState> out;
    out.reserve(firm_avail.size() * worker_avail.size());
    for (const Bitset& fa : firm_avail) {
        for (const Bitset& wa : worker_avail) out.push_back(TState{fa, wa});
    }
    return out;
}

TMonotoneReport t_monotone_check(const Economy& e, std::size_t cap) {
    e.validate();
    const std::size_t n = e.u.size();
    if (n > 31 || (std::size_t(1) << (2 * n)) > cap) {
        throw SizeLimitError("availability-state space exceeds cap");
    }
    const std::uint64_t total = std::uint64_t(1) << n;
    auto state_of = [&](std::uint64_t fm, std::uint64_t wm) {
        TState s{Bitset(n), Bitset(n)};
        for (std::size_t b = 0; b < n; ++b) {
            if ((fm >> b) & 1) s.avail_firms.set(b);
            if ((wm >> b) & 1) s.avail_workers.set(b);
        }
        return s;
    };
    // one image family per state, reused across all ordered pairs
    std::vector<std::vector<TState>> images(total * total);
    for (std::uint64_t fm = 0; fm < total; ++fm) {
        for (std::uint64_t wm = 0; wm < total; ++wm) {
            images[fm * total + wm] = t_apply(e, state_of(fm, wm));
        }
    }
    TMonotoneReport rep;
    for (std::uint64_t fm = 0; fm < total && rep.monotone; ++fm) {
        for (std::uint64_t wm = 0; wm < total && rep.monotone; ++wm) {
            TState lo = state_of(fm, wm);
            const auto& lo_img = images[fm * total + wm];
            const std::uint64_t grow = ~fm & (total - 1);
            for (std::uint64_t extra = grow; rep.monotone; extra = (extra - 1) & grow) {
                for (std::uint64_t keep = wm;; keep = (keep - 1) & wm) {
                    const auto& hi_img = images[(fm | extra) * total + keep];
                    for (const TState& y : lo_img) {
                        bool mate = false;
                        for (const TState& yh : hi_img) mate = mate || tstate_leq(y, yh);
                        if (!mate) {
                            rep.monotone = false;
                            rep.witness = "upper mate missing above (" +
                                          describe(e.u, lo.avail_firms) + "," +
                                          describe(e.u, lo.avail_workers) + ")";
                            break;
                        }
                    }
                    for (const TState& yh : hi_img) {
                        if (!rep.monotone) break;
                        bool mate = false;
                        for (const TState& y : lo_img) mate = mate || tstate_leq(y, yh);
                        if (!mate) {
                            rep.monotone = false;
                            rep.witness = "lower mate missing under a grown state above (" +
                                          describe(e.u, lo.avail_firms) + "," +
                                          describe(e.u, lo.avail_workers) + ")";
                        }
                    }
                    if (!rep.monotone || keep == 0) break;
                }
                if (extra == 0) break;
            }
        }
    }
    if (!rep.monotone) {
        bool all_ws = true;
        for (AgentRef a : all_agents(e)) {
            all_ws = all_ws && weak_substitutable(e, a).holds;
        }
        if (all_ws) {
            throw TheoremViolation(
                "availability operator not monotone under weak substitutability");
        }
    }
    return rep;
}

std::vector<TState> t_fixed_points(const Economy& e, std::size_t cap) {
    e.validate();
    const std::size_t n = e.u.size();
    if (n > 31 || (std::size_t(1) << (2 * n)) > cap) {
        throw SizeLimitError("availability-state space exceeds cap");
    }
    const std::uint64_t total = std::uint64_t(1) << n;
    std::vector<TState> out;
    for (std::uint64_t fm = 0; fm < total; ++fm) {
        for (std::uint64_t wm = 0; wm < total; ++wm) {
            TState s{Bitset(n), Bitset(n)};
            for (std::size_t b = 0; b < n; ++b) {
                if ((fm >> b) & 1) s.avail_firms.set(b);
                if ((wm >> b) & 1) s.avail_workers.set(b);
            }
            if (t_contains(e, s, s)) out.push_back(s);
        }
    }
    return out;
}

namespace {

void require_solver_hypotheses(const Economy& e) {
    for (AgentRef a : all_agents(e)) {
        if (!axiom_check(e, a, Axiom::SenAlpha).holds) {
            throw HypothesisError("an agent's rule violates the containment axiom");
        }
        if (!weak_substitutable(e, a).holds) {
            throw HypothesisError("an agent's rule is not weakly substitutable");
        }
    }
}

// least canonical rejection selection compatible with the monotone step
Bitset pick_rejection(const Economy& e, AgentRef a, const Bitset& avail,
                      const std::function<bool(const Bitset&)>& admissible) {
    for (const Bitset& r : rejection_family(e, a, avail)) {
        if (admissible(r)) return r;
    }
    throw TheoremViolation("no admissible rejection despite verified monotonicity");
}

}  // namespace

Bitset stable_solve(const Economy& e) {
    e.validate();
    require_solver_hypotheses(e);
    TState s{e.u.none(), e.u.all()};
    const std::size_t max_steps = 2 * e.u.size() + 2;
    for (std::size_t step = 0; step <= max_steps; ++step) {
        if (t_contains(e, s, s)) {
            const Bitset z = s.avail_firms & s.avail_workers;
            if (!is_stable(e, z)) {
                throw TheoremViolation("extracted allocation is not stable");
            }
            return z;
        }
        // next firm-side availability: complement of worker rejections that
        // keep every currently available firm contract
        Bitset worker_rejections(e.u.size());
        for (std::size_t w = 0; w < e.u.n_workers; ++w) {
            worker_rejections |= pick_rejection(
                e, {false, w}, s.avail_workers,
                [&](const Bitset& r) { return !r.intersects(s.avail_firms); });
        }
        // next worker-side availability: complement of firm rejections that
        // still reject everything already unavailable to workers
        const Bitset must_reject = e.u.all() - s.avail_workers;
        Bitset firm_rejections(e.u.size());
        for (std::size_t f = 0; f < e.u.n_firms; ++f) {
            const Bitset needed = must_reject & e.u.firm_contracts[f];
            firm_rejections |= pick_rejection(
                e, {true, f}, s.avail_firms,
                [&](const Bitset& r) { return needed.is_subset_of(r); });
        }
        s = TState{e.u.all() - worker_rejections, e.u.all() - firm_rejections};
    }
    throw TheoremViolation("availability iteration failed to reach a fixed point");
}

std::vector<Bitset> stable_set(const Economy& e, std::size_t cap) {
    e.validate();
    // enumerate allocations worker by worker
    std::vector<std::vector<std::size_t>> options(e.u.n_workers);
    std::size_t combos = 1;
    for (std::size_t w = 0; w < e.u.n_workers; ++w) {
        options[w] = e.u.worker_contracts[w].indices();
        combos *= options[w].size() + 1;
        if (combos > cap) throw SizeLimitError("allocation enumeration exceeds cap");
    }
    std::vector<Bitset> out;
    std::vector<std::size_t> pick(e.u.n_workers, 0);  // 0 = unmatched, k = option k-1
    for (;;) {
        Bitset z(e.u.size());
        for (std::size_t w = 0; w < e.u.n_workers; ++w) {
            if (pick[w] > 0) z.set(options[w][pick[w] - 1]);
        }
        if (is_stable(e, z)) out.push_back(z);
        std::size_t w = 0;
        while (w < e.u.n_workers) {
            if (++pick[w] <= options[w].size()) break;
            pick[w] = 0;
            ++w;
        }
        if (w == e.u.n_workers) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Bitset> worker_optimal_stable(const Economy& e, const std::vector<Bitset>& stable) {
    for (const Bitset& z : stable) {
        bool best = true;
        for (std::size_t w = 0; w < e.u.n_workers && best; ++w) {
            for (const Bitset& other : stable) {
                if (!blair_weakly_prefers(e, {false, w}, z, other)) {
                    best = false;
                    break;
                }
            }
        }
        if (best) return z;
    }
    return std::nullopt;
}

namespace {

// the canonical fixed point carrying a stable allocation
TState canonical_fixed_point(const Economy& e, const Bitset& z) {
    const Bitset u = upper_contour(e, z);
    return TState{z | u, e.u.all() - u};
}

}  // namespace

bool characterization_check(const Economy& e, std::size_t cap) {
    e.validate();
    const auto stable = stable_set(e);
    const auto fixed = t_fixed_points(e, cap);

    // every allocation extracted from a fixed point is stable
    for (const TState& s : fixed) {
        const Bitset z = s.avail_firms & s.avail_workers;
        bool member = true;
        for (AgentRef a : all_agents(e)) {
            const Bitset avail = a.is_firm ? s.avail_firms : s.avail_workers;
            if (!family_contains_sorted(choice_family(e, a, avail),
                                        z & own_contracts(e, a))) {
                member = false;
                break;
            }
        }
        if (member && !std::binary_search(stable.begin(), stable.end(), z)) return false;
    }
    // every stable allocation arises from its canonical fixed point
    for (const Bitset& z : stable) {
        TState s = canonical_fixed_point(e, z);
        if (!t_contains(e, s, s)) return false;
        for (AgentRef a : all_agents(e)) {
            const Bitset avail = a.is_firm ? s.avail_firms : s.avail_workers;
            if (!family_contains_sorted(choice_family(e, a, avail),
                                        z & own_contracts(e, a))) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// monotone walk of the shifted availability operator from a starting fixed
// point, downward in the state order (firm side shrinks, worker side grows)
TState walk_down(const Economy& shifted, const TState& start) {
    TState s = start;
    const std::size_t max_steps = 2 * shifted.u.size() + 2;
    for (std::size_t step = 0; step <= max_steps; ++step) {
        if (t_contains(shifted, s, s)) return s;
        // choose selections producing a state <= s
        Bitset worker_rejections(shifted.u.size());
        const Bitset must_reject_w = shifted.u.all() - s.avail_firms;
        for (std::size_t w = 0; w < shifted.u.n_workers; ++w) {
            const Bitset needed = must_reject_w & shifted.u.worker_contracts[w];
            worker_rejections |= pick_rejection(
                shifted, {false, w}, s.avail_workers,
                [&](const Bitset& r) { return needed.is_subset_of(r); });
        }
        Bitset firm_rejections(shifted.u.size());
        for (std::size_t f = 0; f < shifted.u.n_firms; ++f) {
            firm_rejections |= pick_rejection(
                shifted, {true, f}, s.avail_firms,
                [&](const Bitset& r) { return !r.intersects(s.avail_workers); });
        }
        s = TState{shifted.u.all() - worker_rejections, shifted.u.all() - firm_rejections};
    }
    throw TheoremViolation("downward availability walk failed to settle");
}

TState walk_up(const Economy& base, const TState& start) {
    TState s = start;
    const std::size_t max_steps = 2 * base.u.size() + 2;
    for (std::size_t step = 0; step <= max_steps; ++step) {
        if (t_contains(base, s, s)) return s;
        Bitset worker_rejections(base.u.size());
        for (std::size_t w = 0; w < base.u.n_workers; ++w) {
            worker_rejections |= pick_rejection(
                base, {false, w}, s.avail_workers,
                [&](const Bitset& r) { return !r.intersects(s.avail_firms); });
        }
        const Bitset must_reject = base.u.all() - s.avail_workers;
        Bitset firm_rejections(base.u.size());
        for (std::size_t f = 0; f < base.u.n_firms; ++f) {
            const Bitset needed = must_reject & base.u.firm_contracts[f];
            firm_rejections |= pick_rejection(
                base, {true, f}, s.avail_firms,
                [&](const Bitset& r) { return needed.is_subset_of(r); });
        }
        s = TState{base.u.all() - worker_rejections, base.u.all() - firm_rejections};
    }
    throw TheoremViolation("upward availability walk failed to settle");
}

Bitset extract_allocation(const Economy& e, const TState& s) {
    const Bitset z = s.avail_firms & s.avail_workers;
    for (AgentRef a : all_agents(e)) {
        const Bitset avail = a.is_firm ? s.avail_firms : s.avail_workers;
        if (!family_contains_sorted(choice_family(e, a, avail), z & own_contracts(e, a))) {
            throw TheoremViolation("fixed point does not carry its allocation");
        }
    }
    if (!is_stable(e, z)) throw TheoremViolation("extracted allocation is not stable");
    return z;
}

}  // namespace

CsReport matching_cs(const Economy& base, const Economy& shifted) {
    base.validate();
    shifted.validate();
    if (base.u.size() != shifted.u.size() || base.u.n_firms != shifted.u.n_firms ||
        base.u.n_workers != shifted.u.n_workers) {
        throw HypothesisError("economies must share the contract universe");
    }
    require_solver_hypotheses(base);
    require_solver_hypotheses(shifted);
    for (std::size_t w = 0; w < base.u.n_workers; ++w) {
        if (!more_permissive(base, shifted, {false, w}).holds) {
            throw HypothesisError("worker rules must be weakly more permissive in the base");
        }
    }
    for (std::size_t f = 0; f < base.u.n_firms; ++f) {
        if (!more_permissive(shifted, base, {true, f}).holds) {
            throw HypothesisError("firm rules must be weakly more permissive in the shift");
        }
    }

    CsReport report;
    for (const Bitset& z : stable_set(base)) {
        TState start = canonical_fixed_point(base, z);
        if (!t_contains(base, start, start)) {
            throw TheoremViolation("canonical fixed point fails for a stable allocation");
        }
        TState landed = walk_down(shifted, start);
        Bitset z_new = extract_allocation(shifted, landed);
        for (std::size_t f = 0; f < base.u.n_firms; ++f) {
            if (!blair_weakly_prefers(base, {true, f}, z, z_new)) {
                throw TheoremViolation("firm-side comparison fails on a witness");
            }
        }
        for (std::size_t w = 0; w < base.u.n_workers; ++w) {
            if (!blair_weakly_prefers(shifted, {false, w}, z_new, z)) {
                throw TheoremViolation("worker-side comparison fails on a witness");
            }
        }
        report.per_base.push_back(CsWitness{z, z_new});
    }
    for (const Bitset& z_new : stable_set(shifted)) {
        TState start = canonical_fixed_point(shifted, z_new);
        if (!t_contains(shifted, start, start)) {
            throw TheoremViolation("canonical fixed point fails for a stable allocation");
        }
        TState landed = walk_up(base, start);
        Bitset z = extract_allocation(base, landed);
        for (std::size_t f = 0; f < base.u.n_firms; ++f) {
            if (!blair_weakly_prefers(base, {true, f}, z, z_new)) {
                throw TheoremViolation("firm-side comparison fails on a witness");
            }
        }
        for (std::size_t w = 0; w < base.u.n_workers; ++w) {
            if (!blair_weakly_prefers(shifted, {false, w}, z_new, z)) {
                throw TheoremViolation("worker-side comparison fails on a witness");
            }
        }
        report.per_shifted.push_back(CsWitness{z, z_new});
    }
    return report;
}

}  // namespace wmcs::matching
