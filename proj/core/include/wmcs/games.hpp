#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "wmcs/correspondence.hpp"
#include "wmcs/pareto.hpp"

namespace wmcs::games {

/// Normal-form game given by per-player strategy posets and best-response
/// rules. Profiles are mixed-radix indices with player 0 most significant,
/// matching the index layout of the iterated product poset.
struct GameDef {
    /// Payoff table over the profile space; best responses maximize it.
    struct UtilityBR {
        choice::ObjectiveTable u;
    };
    /// Sub-player payoff tables over the profile space; best responses are
    /// the Pareto optimal own-strategy choices of the sub-players.
    struct ParetoBR {
        std::vector<choice::ObjectiveTable> sub;
    };
    /// Explicit best responses indexed by opponent profile.
    struct ExplicitBR {
        std::vector<Bitset> br;
    };
    using Rule = std::variant<UtilityBR, ParetoBR, ExplicitBR>;

    std::vector<Poset> strategy;
    std::vector<Rule> rule;

    std::size_t players() const { return strategy.size(); }
    std::size_t n_profiles() const;
    std::size_t n_opponent_profiles(std::size_t i) const;

    std::size_t profile_index(const std::vector<std::size_t>& s) const;
    std::vector<std::size_t> profile_of(std::size_t idx) const;
    std::size_t opponent_index(const std::vector<std::size_t>& s, std::size_t i) const;
    std::vector<std::size_t> opponents_of(std::size_t opp_idx, std::size_t i) const;
    /// Profile index with player i playing si against opponent profile opp.
    std::size_t compose(std::size_t i, std::size_t si, std::size_t opp) const;

    void validate() const;
};

/// Best responses of player i against an opponent profile; always nonempty.
Bitset best_response(const GameDef& g, std::size_t i, std::size_t opp_idx);

/// All best responses, indexed [player][opponent profile].
std::vector<std::vector<Bitset>> precompute_best_responses(const GameDef& g);

struct WscReport {
    bool in_g_plus = false;
    bool in_g_minus = false;
    /// Starting profiles witnessing the respective condition (b).
    std::optional<std::size_t> plus_start;
    std::optional<std::size_t> minus_start;
    std::string detail;  // first monotonicity failure, when one exists
};

/// Classification into the games-with-weak-strategic-complementarities
/// classes: per-player best-response monotonicity over all ordered opponent
/// pairs plus the existence of a starting profile.
WscReport classify_wsc(const GameDef& g);

/// Exhaustive pure Nash enumeration, ascending profile index. When the
/// classification places the game in either class, nonemptiness is asserted
/// (TheoremViolation). SizeLimitError beyond the profile cap.
std::vector<std::size_t> nash_set(const GameDef& g, std::size_t max_profiles = 1u << 20);

/// Product poset of the strategy spaces; element index == profile index.
Poset profile_poset(const GameDef& g, std::size_t max_elements = kDefaultMaxElements);

/// Product best-response correspondence over the profile poset; Nash
/// profiles are exactly its fixed points.
fp::Correspondence br_correspondence(const GameDef& g, const Poset& profiles);

struct NashCompareReport {
    bool holds = false;
    /// Per-equilibrium lift witnesses (old profile, mate in the other game);
    /// upward lifts for the upper comparison, downward for the lower.
    std::vector<std::pair<std::size_t, std::size_t>> lifts;
};

/// Set-order comparison of equilibrium sets after verifying the relevant
/// monotone-shift hypotheses (HypothesisError otherwise). g_new is the
/// shifted-up game.
NashCompareReport nash_compare(const GameDef& g, const GameDef& g_new, order::SetOrderMode mode,
                               std::size_t max_profiles = 1u << 20);

/// Monotone best-response dynamics from a starting profile satisfying the
/// directional condition (found by classify_wsc). Reaches one equilibrium
/// without enumerating the profile space, so it works beyond the exhaustive
/// cap; completeness is not claimed.
std::optional<std::size_t> nash_iterate(const GameDef& g, fp::Direction dir);

/// u_i weakly increasing in opponents' strategies for every own strategy.
bool payoff_monotone(const GameDef& g, std::size_t i);

/// Payoffs of player i across the given profiles (utility-rule games only).
std::vector<Rational> equilibrium_payoffs(const GameDef& g, std::size_t i,
                                          const std::vector<std::size_t>& profiles);

/// Weak-set-order comparison of finite rational sets under the usual order
/// on rationals.
bool rational_set_dominates(const std::vector<Rational>& sp, const std::vector<Rational>& s,
                            order::SetOrderMode mode);

}  // namespace wmcs::games
