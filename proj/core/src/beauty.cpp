#include "wmcs/beauty.hpp"

namespace wmcs::games {

namespace {

Rational sq(const Rational& r) { return r * r; }

}  // namespace

GameDef beauty_contest_build(const BeautyContestSpec& spec, std::size_t max_profiles) {
    if (spec.n_players < 2) throw SchemaError("beauty contest needs at least two players");
    if (spec.grid_den < 1) throw SchemaError("grid step must divide 1");
    Poset axis = unit_grid_chain(spec.grid_den);
    Poset square = Poset::product(axis, axis);
    const std::size_t per_player = square.size();

    std::size_t np = 1;
    for (std::size_t i = 0; i < spec.n_players; ++i) {
        if (np > max_profiles / per_player) {
            throw SizeLimitError("beauty contest profile space exceeds cap");
        }
        np *= per_player;
    }

    // strategy-index -> (x, y) coordinates, shared by all players
    std::vector<std::pair<Rational, Rational>> coord;
    coord.reserve(per_player);
    for (long long x = 0; x <= spec.grid_den; ++x) {
        for (long long y = 0; y <= spec.grid_den; ++y) {
            coord.emplace_back(Rational(x, spec.grid_den), Rational(y, spec.grid_den));
        }
    }

    GameDef g;
    g.strategy.assign(spec.n_players, square);
    const Rational inv_others(1, static_cast<long long>(spec.n_players - 1));
    for (std::size_t i = 0; i < spec.n_players; ++i) {
        choice::ObjectiveTable div_a(np, Rational(0));
        choice::ObjectiveTable div_b(np, Rational(0));
        for (std::size_t p = 0; p < np; ++p) {
            // decode the profile in-place (mixed radix over equal-size axes)
            std::size_t rest = p;
            std::vector<std::size_t> s(spec.n_players);
            for (std::size_t j = spec.n_players; j-- > 0;) {
                s[j] = rest % per_player;
                rest /= per_player;
            }
            Rational sum_x(0), sum_y(0);
            for (std::size_t j = 0; j < spec.n_players; ++j) {
                if (j == i) continue;
                sum_x += coord[s[j]].first;
                sum_y += coord[s[j]].second;
            }
            const Rational omega_a = inv_others * sum_x + spec.theta_a;
            const Rational omega_b = inv_others * sum_y + spec.theta_b;
            const auto& [xi, yi] = coord[s[i]];
            div_a[p] = -sq(xi - 2 * omega_a) - sq(yi - omega_b);
            div_b[p] = -sq(xi - omega_a) - sq(yi - 2 * omega_b);
        }
        g.rule.emplace_back(GameDef::ParetoBR{{std::move(div_a), std::move(div_b)}});
    }
    g.validate();
    return g;
}

}  // namespace wmcs::games
