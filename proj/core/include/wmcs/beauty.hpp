#pragma once

#include "wmcs/games.hpp"

namespace wmcs::games {

/// Coordination game among two-division firms: each player picks an
/// investment pair on the unit grid, and each division wants the pair close
/// to a target driven by the opponents' average play plus a drift theta.
/// Division 1 overweights the first technology, division 2 the second, so
/// best responses are Pareto sets of the two divisions.
struct BeautyContestSpec {
    std::size_t n_players = 2;
    long long grid_den = 2;  // per-axis step 1/grid_den
    Rational theta_a;
    Rational theta_b;
};

GameDef beauty_contest_build(const BeautyContestSpec& spec,
                             std::size_t max_profiles = 1u << 20);

}  // namespace wmcs::games
