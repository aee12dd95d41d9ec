#include "wmcs/constraints.hpp"

#include <algorithm>

namespace wmcs::matching {

void ConstraintsMarket::validate() const {
    if (doctor_prefs.size() != n_doctors || hospital_prefs.size() != n_hospitals ||
        capacity.size() != n_hospitals) {
        throw SchemaError("market shape mismatch");
    }
    for (const auto& prefs : doctor_prefs) {
        for (auto h : prefs) {
            if (h >= n_hospitals) throw SchemaError("doctor ranks unknown hospital");
        }
    }
    for (const auto& prefs : hospital_prefs) {
        for (auto d : prefs) {
            if (d >= n_doctors) throw SchemaError("hospital ranks unknown doctor");
        }
    }
    if (max_feasible.empty()) throw SchemaError("feasibility needs at least one maximal vector");
    for (const auto& m : max_feasible) {
        if (m.size() != n_hospitals) throw SchemaError("feasible vector size mismatch");
        for (std::size_t h = 0; h < n_hospitals; ++h) {
            if (m[h] < 0) throw SchemaError("negative feasible count");
            if (m[h] > capacity[h]) {
                throw InfeasibleCapacityError("feasible vector exceeds capacity at hospital " +
                                              std::to_string(h));
            }
        }
    }
}

bool ConstraintsMarket::feasible(const std::vector<int>& w) const {
    for (const auto& m : max_feasible) {
        bool below = true;
        for (std::size_t h = 0; h < n_hospitals && below; ++h) below = w[h] <= m[h];
        if (below) return true;
    }
    return false;
}

Economy constraints_to_contracts(const ConstraintsMarket& m) {
    m.validate();
    Economy e;
    e.u.n_firms = 1;  // the hospital side as one consortium
    e.u.n_workers = m.n_doctors;
    for (std::size_t d = 0; d < m.n_doctors; ++d) {
        for (std::size_t h = 0; h < m.n_hospitals; ++h) {
            e.u.contracts.push_back(
                Contract{0, d, "d" + std::to_string(d) + "h" + std::to_string(h)});
        }
    }
    e.u.finalize();

    QuasiChoiceRule side;
    side.unit_ranking.assign(m.n_hospitals, {});
    for (std::size_t h = 0; h < m.n_hospitals; ++h) {
        for (std::size_t d : m.hospital_prefs[h]) {
            side.unit_ranking[h].push_back(d * m.n_hospitals + h);
        }
    }
    side.max_feasible = m.max_feasible;
    e.firm_rule.push_back(std::move(side));

    for (std::size_t d = 0; d < m.n_doctors; ++d) {
        std::vector<std::size_t> best_first;
        for (std::size_t h : m.doctor_prefs[d]) best_first.push_back(d * m.n_hospitals + h);
        e.worker_rule.push_back(WorkerOrderRule::from_list(e.u, d, best_first));
    }
    e.validate();
    return e;
}

DoctorMatching matching_of(const ConstraintsMarket& m, const Economy& e, const Bitset& z) {
    DoctorMatching mu(m.n_doctors, -1);
    for (std::size_t x = z.first(); x < z.size(); x = z.next(x + 1)) {
        const Contract& c = e.u.contracts[x];
        if (mu[c.worker] != -1) throw AllocationError("doctor holds two contracts");
        mu[c.worker] = static_cast<int>(x % m.n_hospitals);
    }
    return mu;
}

Bitset allocation_of(const ConstraintsMarket& m, const Economy& e, const DoctorMatching& mu) {
    Bitset z(e.u.size());
    for (std::size_t d = 0; d < m.n_doctors; ++d) {
        if (mu[d] >= 0) z.set(d * m.n_hospitals + static_cast<std::size_t>(mu[d]));
    }
    return z;
}

namespace {

std::vector<int> head_counts(const ConstraintsMarket& m, const DoctorMatching& mu) {
    std::vector<int> w(m.n_hospitals, 0);
    for (std::size_t d = 0; d < m.n_doctors; ++d) {
        if (mu[d] >= 0) ++w[static_cast<std::size_t>(mu[d])];
    }
    return w;
}

bool doctor_accepts(const ConstraintsMarket& m, std::size_t d, std::size_t h) {
    const auto& prefs = m.doctor_prefs[d];
    return std::find(prefs.begin(), prefs.end(), h) != prefs.end();
}

bool hospital_accepts(const ConstraintsMarket& m, std::size_t h, std::size_t d) {
    const auto& prefs = m.hospital_prefs[h];
    return std::find(prefs.begin(), prefs.end(), d) != prefs.end();
}

/// rank in the hospital's list; smaller is better
std::size_t hospital_rank(const ConstraintsMarket& m, std::size_t h, std::size_t d) {
    const auto& prefs = m.hospital_prefs[h];
    return static_cast<std::size_t>(
        std::find(prefs.begin(), prefs.end(), d) - prefs.begin());
}

bool doctor_prefers(const ConstraintsMarket& m, std::size_t d, std::size_t h, int over) {
    // does d strictly prefer hospital h to the current assignment `over`?
    if (!doctor_accepts(m, d, h)) return false;
    if (over < 0) return true;
    const auto& prefs = m.doctor_prefs[d];
    auto pos_h = std::find(prefs.begin(), prefs.end(), h);
    auto pos_o = std::find(prefs.begin(), prefs.end(), static_cast<std::size_t>(over));
    return pos_h < pos_o;
}

}  // namespace

bool weakly_stable(const ConstraintsMarket& m, const DoctorMatching& mu) {
    m.validate();
    if (mu.size() != m.n_doctors) throw SchemaError("matching size mismatch");
    std::vector<int> w = head_counts(m, mu);
    if (!m.feasible(w)) return false;
    // individual rationality and capacities
    for (std::size_t d = 0; d < m.n_doctors; ++d) {
        if (mu[d] >= 0) {
            std::size_t h = static_cast<std::size_t>(mu[d]);
            if (!doctor_accepts(m, d, h) || !hospital_accepts(m, h, d)) return false;
        }
    }
    for (std::size_t h = 0; h < m.n_hospitals; ++h) {
        if (w[h] > m.capacity[h]) return false;
    }
    // blocking pairs must all be tolerated
    for (std::size_t d = 0; d < m.n_doctors; ++d) {
        for (std::size_t h = 0; h < m.n_hospitals; ++h) {
            if (!doctor_prefers(m, d, h, mu[d])) continue;
            bool vacancy_block = w[h] < m.capacity[h] && hospital_accepts(m, h, d);
            bool swap_block = false;
            for (std::size_t d2 = 0; d2 < m.n_doctors && !swap_block; ++d2) {
                if (mu[d2] == static_cast<int>(h) && hospital_accepts(m, h, d) &&
                    hospital_rank(m, h, d) < hospital_rank(m, h, d2)) {
                    swap_block = true;
                }
            }
            if (!vacancy_block && !swap_block) continue;  // not a blocking pair
            // tolerated only if adding a slot at h is infeasible and d is
            // below everyone currently at h
            std::vector<int> bumped = w;
            ++bumped[h];
            if (m.feasible(bumped)) return false;
            for (std::size_t d2 = 0; d2 < m.n_doctors; ++d2) {
                if (mu[d2] == static_cast<int>(h) &&
                    hospital_rank(m, h, d) < hospital_rank(m, h, d2)) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<DoctorMatching> all_matchings(const ConstraintsMarket& m, std::size_t cap) {
    std::size_t combos = 1;
    for (std::size_t d = 0; d < m.n_doctors; ++d) {
        combos *= m.n_hospitals + 1;
        if (combos > cap) throw SizeLimitError("matching enumeration exceeds cap");
    }
    std::vector<DoctorMatching> out;
    DoctorMatching mu(m.n_doctors, -1);
    for (;;) {
        out.push_back(mu);
        std::size_t d = 0;
        while (d < m.n_doctors) {
            if (++mu[d] < static_cast<int>(m.n_hospitals)) break;
            mu[d] = -1;
            ++d;
        }
        if (d == m.n_doctors) break;
    }
    return out;
}

std::vector<DoctorMatching> weakly_stable_set(const ConstraintsMarket& m, std::size_t cap) {
    std::vector<DoctorMatching> out;
    for (const auto& mu : all_matchings(m, cap)) {
        if (weakly_stable(m, mu)) out.push_back(mu);
    }
    return out;
}

DoctorMatching weak_stable_solve(const ConstraintsMarket& m) {
    Economy e = constraints_to_contracts(m);
    Bitset z = stable_solve(e);
    DoctorMatching mu = matching_of(m, e, z);
    if (!weakly_stable(m, mu)) {
        throw TheoremViolation("solved matching is not weakly stable");
    }
    return mu;
}

bool constraints_equivalence_check(const ConstraintsMarket& m) {
    Economy e = constraints_to_contracts(m);
    auto stable = stable_set(e);
    std::vector<DoctorMatching> from_contracts;
    for (const Bitset& z : stable) from_contracts.push_back(matching_of(m, e, z));
    std::sort(from_contracts.begin(), from_contracts.end());
    auto weak = weakly_stable_set(m);
    std::sort(weak.begin(), weak.end());
    return from_contracts == weak;
}

std::vector<ConstraintsCsWitness> constraints_cs(const ConstraintsMarket& tight,
                                                 const ConstraintsMarket& relaxed) {
    tight.validate();
    relaxed.validate();
    if (tight.n_doctors != relaxed.n_doctors || tight.n_hospitals != relaxed.n_hospitals ||
        tight.doctor_prefs != relaxed.doctor_prefs ||
        tight.hospital_prefs != relaxed.hospital_prefs || tight.capacity != relaxed.capacity) {
        throw HypothesisError("markets must differ only in the feasibility constraint");
    }
    // pointwise relaxation: everything feasible stays feasible
    for (const auto& mv : tight.max_feasible) {
        if (!relaxed.feasible(mv)) {
            throw HypothesisError("relaxed constraint loses a feasible vector");
        }
    }
    Economy e_tight = constraints_to_contracts(tight);
    Economy e_relaxed = constraints_to_contracts(relaxed);
    // the relaxed consortium is the more permissive firm side
    CsReport rep = matching_cs(e_tight, e_relaxed);
    std::vector<ConstraintsCsWitness> out;
    for (const CsWitness& w : rep.per_base) {
        ConstraintsCsWitness cw;
        cw.tight = matching_of(tight, e_tight, w.base);
        cw.relaxed = matching_of(relaxed, e_relaxed, w.shifted);
        // doctors weakly prefer the relaxed-side matching
        for (std::size_t d = 0; d < tight.n_doctors; ++d) {
            int ht = cw.tight[d];
            int hr = cw.relaxed[d];
            if (ht == hr) continue;
            if (hr == -1 || (ht != -1 && doctor_prefers(tight, d, static_cast<std::size_t>(ht),
                                                        hr))) {
                throw TheoremViolation("a doctor strictly loses from the relaxation");
            }
        }
        out.push_back(std::move(cw));
    }
    return out;
}

}  // namespace wmcs::matching
