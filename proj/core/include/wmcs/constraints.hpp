#pragma once

#include "wmcs/matching.hpp"

namespace wmcs::matching {

/// Doctor-hospital market with a joint feasibility constraint over
/// hospital head counts (regional caps and the like), given by its maximal
/// feasible vectors.
struct ConstraintsMarket {
    std::size_t n_doctors = 0;
    std::size_t n_hospitals = 0;
    std::vector<std::vector<std::size_t>> doctor_prefs;    // acceptable hospitals, best first
    std::vector<std::vector<std::size_t>> hospital_prefs;  // acceptable doctors, best first
    std::vector<int> capacity;
    std::vector<std::vector<int>> max_feasible;

    void validate() const;  // InfeasibleCapacityError when a feasible vector
                            // exceeds the capacities
    bool feasible(const std::vector<int>& w) const;
};

/// A matching assigns each doctor a hospital or none (-1).
using DoctorMatching = std::vector<int>;

/// Contracts economy with one worker per doctor and a single consortium
/// firm choosing through the quasi-choice correspondence of the constraint.
Economy constraints_to_contracts(const ConstraintsMarket& m);

/// Translate between allocations of the associated economy and matchings.
DoctorMatching matching_of(const ConstraintsMarket& m, const Economy& e, const Bitset& z);
Bitset allocation_of(const ConstraintsMarket& m, const Economy& e, const DoctorMatching& mu);

/// Feasible, individually rational, and every blocking pair is tolerated:
/// adding a position at the hospital is infeasible and the blocking doctor
/// ranks below everyone the hospital currently has.
bool weakly_stable(const ConstraintsMarket& m, const DoctorMatching& mu);

std::vector<DoctorMatching> all_matchings(const ConstraintsMarket& m, std::size_t cap = 1u << 22);
std::vector<DoctorMatching> weakly_stable_set(const ConstraintsMarket& m,
                                              std::size_t cap = 1u << 22);

/// Solve through the associated contracts economy.
DoctorMatching weak_stable_solve(const ConstraintsMarket& m);

/// Both directions of the transfer claim: allocations stable in the
/// associated economy correspond exactly to weakly stable matchings.
bool constraints_equivalence_check(const ConstraintsMarket& m);

struct ConstraintsCsWitness {
    DoctorMatching tight;    // weakly stable under the tighter constraint
    DoctorMatching relaxed;  // weakly stable under the looser one
};

/// Comparative statics when the feasibility constraint is relaxed pointwise
/// (every feasible vector stays feasible): doctors weakly prefer the
/// relaxed-side witness in every returned pair. HypothesisError when the
/// relaxation direction fails.
std::vector<ConstraintsCsWitness> constraints_cs(const ConstraintsMarket& tight,
                                                 const ConstraintsMarket& relaxed);

}  // namespace wmcs::matching
