#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wmcs/bitset.hpp"
#include "wmcs/errors.hpp"

namespace wmcs::matching {

struct Contract {
    std::size_t firm = 0;
    std::size_t worker = 0;
    std::string label;
};

struct ContractUniverse {
    std::size_t n_firms = 0;
    std::size_t n_workers = 0;
    std::vector<Contract> contracts;

    // per-agent contract sets, built by finalize()
    std::vector<Bitset> firm_contracts;
    std::vector<Bitset> worker_contracts;

    std::size_t size() const { return contracts.size(); }
    void finalize();
    Bitset none() const { return Bitset(size()); }
    Bitset all() const { return Bitset::full(size()); }
    std::optional<std::size_t> index_of(const std::string& label) const;
};

/// Sparse table over own-offer subsets with a declared fallback.
struct ExplicitTableRule {
    enum class Fallback { ChooseAll, ChooseNone };
    Fallback fallback = Fallback::ChooseAll;
    std::map<Bitset, std::vector<Bitset>> entries;
};

/// Unit-demand worker: choice is the family of undominated acceptable
/// options (the outside option included when itself undominated) under a
/// strict partial order over own contracts plus the outside option.
struct WorkerOrderRule {
    std::vector<std::size_t> own;  // contract indices, ascending
    /// Strict dominance over positions 0..own.size(); the last position is
    /// the outside option. Transitively closed and irreflexive.
    std::vector<Bitset> dominates;

    static constexpr std::size_t kNull = static_cast<std::size_t>(-1);
    /// pairs hold contract indices or kNull for the outside option
    static WorkerOrderRule from_pairs(const ContractUniverse& u, std::size_t worker,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& sp);
    /// strict list best-first; unlisted own contracts are unacceptable
    static WorkerOrderRule from_list(const ContractUniverse& u, std::size_t worker,
                                     const std::vector<std::size_t>& best_first);
};

/// Single strict list with a capacity; the choice is a function.
struct ResponsiveRule {
    std::vector<std::size_t> ranking;  // acceptable contracts, best first
    std::size_t capacity = 0;
};

/// Organization of units (divisions, or member hospitals of a regional
/// consortium) with per-unit strict lists and a monotone feasibility
/// predicate over unit head-count vectors, given by its maximal feasible
/// vectors. Choices come from the quasi-choice correspondence of maximal
/// feasible vectors below the offered counts.
struct QuasiChoiceRule {
    std::vector<std::vector<std::size_t>> unit_ranking;  // per unit, best first
    std::vector<std::vector<int>> max_feasible;

    bool feasible(const std::vector<int>& w) const;
    std::vector<std::vector<int>> quasi_choice(const std::vector<int>& w) const;
};

using ChoiceRule = std::variant<ExplicitTableRule, WorkerOrderRule, ResponsiveRule, QuasiChoiceRule>;

struct Economy {
    ContractUniverse u;
    std::vector<ChoiceRule> firm_rule;
    std::vector<ChoiceRule> worker_rule;

    void validate() const;
};

struct AgentRef {
    bool is_firm = true;
    std::size_t idx = 0;
};
std::vector<AgentRef> all_agents(const Economy& e);
const ChoiceRule& rule_of(const Economy& e, AgentRef a);
const Bitset& own_contracts(const Economy& e, AgentRef a);

/// C_a(offered): canonical-ordered family of chosen own-subsets. Nonempty.
std::vector<Bitset> choice_family(const Economy& e, AgentRef a, const Bitset& offered);
/// R_a(offered) = {offered_a \ Y : Y in C_a(offered)}, canonical order.
std::vector<Bitset> rejection_family(const Economy& e, AgentRef a, const Bitset& offered);

enum class Axiom { SenAlpha, SenBeta, WARP, WARNI };

struct AxiomReport {
    bool holds = true;
    bool exhaustive = true;
    std::size_t checked = 0;
    std::string witness;
};

/// Exhaustive when the agent's contract count is within `exhaustive_limit`,
/// seeded sampling above it. Throws BudgetExceeded when even sampling is
/// infeasible (own sets beyond the mask width).
AxiomReport axiom_check(const Economy& e, AgentRef a, Axiom axiom, std::size_t budget = 1u << 22,
                        std::size_t exhaustive_limit = 12, std::uint64_t seed = 1);

/// Upper and lower weak set monotonicity of the rejection correspondence on
/// the inclusion order of offer sets.
AxiomReport weak_substitutable(const Economy& e, AgentRef a, std::size_t budget = 1u << 22,
                               std::size_t exhaustive_limit = 12, std::uint64_t seed = 1);

/// Strong set monotonicity of the rejection correspondence (cross unions
/// chosen above, intersections below). Fails already for simple
/// indifference rules; exhaustive over nested offer pairs.
AxiomReport strong_substitutable(const Economy& e, AgentRef a, std::size_t budget = 1u << 22,
                                 std::size_t exhaustive_limit = 12);

/// ruleA weakly more permissive than ruleB: R_A(X') <=ws R_B(X') for all
/// offer sets (so A rejects less). Both rules are read against the same
/// agent position in their respective economies.
AxiomReport more_permissive(const Economy& ea, const Economy& eb, AgentRef a,
                            std::size_t budget = 1u << 22, std::size_t exhaustive_limit = 12,
                            std::uint64_t seed = 1);

/// Blair comparisons between allocations restricted to an agent.
bool blair_weakly_prefers(const Economy& e, AgentRef a, const Bitset& za, const Bitset& zb);
bool blair_strictly_prefers(const Economy& e, AgentRef a, const Bitset& za, const Bitset& zb);

bool is_allocation(const Economy& e, const Bitset& z);

/// Contracts every involved worker strictly Blair-prefers to her current
/// assignment under Z.
Bitset upper_contour(const Economy& e, const Bitset& z);

/// Stability: individual rationality plus firm-side optimality against the
/// pool of current-plus-aspiring contracts. AllocationError if z gives a
/// worker two contracts.
bool is_stable(const Economy& e, const Bitset& z);

/// The pairwise-block variant: no firm finds an allocation it strictly
/// Blair-prefers whose new contracts all strictly please their workers.
bool is_alt_stable(const Economy& e, const Bitset& z);

/// Two-sided availability state: contracts available to firms and workers.
struct TState {
    Bitset avail_firms;    // X'
    Bitset avail_workers;  // X''

    bool operator==(const TState& o) const = default;
};
/// Component order: firm side by inclusion, worker side by reverse inclusion.
bool tstate_leq(const TState& a, const TState& b);

/// All states reachable in one application (cartesian product of per-agent
/// rejection selections). SizeLimitError when the family exceeds the cap.
std::vector<TState> t_apply(const Economy& e, const TState& s, std::size_t cap = 1u << 16);
/// Membership candidate in T(s), decided agent-by-agent.
bool t_contains(const Economy& e, const TState& s, const TState& candidate);

struct TMonotoneReport {
    bool monotone = true;
    std::string witness;
};
/// Exhaustive monotonicity check of the availability operator over ordered
/// state pairs. SizeLimitError when 4^|X| exceeds the cap. When every rule
/// is weakly substitutable a failure is a TheoremViolation.
TMonotoneReport t_monotone_check(const Economy& e, std::size_t cap = 1u << 14);

/// Fixed points of the availability operator, exhaustively.
std::vector<TState> t_fixed_points(const Economy& e, std::size_t cap = 1u << 14);

/// Requires every agent's rule to satisfy the containment axiom and weak
/// substitutability (HypothesisError). Iterates the availability operator
/// upward from (no contracts for firms, all for workers) with least
/// canonical selections and extracts the stable allocation.
Bitset stable_solve(const Economy& e);

/// All stable allocations by brute force. SizeLimitError via cap on the
/// number of candidate allocations.
std::vector<Bitset> stable_set(const Economy& e, std::size_t cap = 1u << 22);

/// A stable allocation every worker weakly Blair-prefers to all others, if
/// one exists.
std::optional<Bitset> worker_optimal_stable(const Economy& e, const std::vector<Bitset>& stable);

/// Verifies both directions of the fixed-point characterization: every
/// extracted allocation of every fixed point is stable, and every stable
/// allocation arises from its canonical fixed point.
bool characterization_check(const Economy& e, std::size_t cap = 1u << 14);

struct CsWitness {
    Bitset base;     // stable in the base economy
    Bitset shifted;  // stable in the shifted economy
};
struct CsReport {
    std::vector<CsWitness> per_base;     // one witness per stable allocation of the base
    std::vector<CsWitness> per_shifted;  // one per stable allocation of the shifted economy
};

/// Comparative statics across two economies over the same contracts where
/// workers' rules are weakly more permissive in the base and firms' in the
/// shifted economy. Witnesses satisfy: firms weakly Blair-prefer the base
/// allocation, workers weakly Blair-prefer the shifted one (under their
/// shifted rules). HypothesisError when permissiveness or axioms fail.
CsReport matching_cs(const Economy& base, const Economy& shifted);

}  // namespace wmcs::matching
