#include <doctest.h>

#include "wmcs/choice.hpp"
#include "wmcs/gen.hpp"

using namespace wmcs;
using namespace wmcs::choice;

namespace {

// objective -(x1 + x2 - t)^2 over a product-of-chains unit grid
ObjectiveTable ridge_table(const Poset& grid, const Rational& t) {
    ObjectiveTable f(grid.size(), Rational(0));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const std::string& l = grid.label(i);
        auto comma = l.find(',');
        Rational x = Rational::parse(l.substr(1, comma - 1));
        Rational y = Rational::parse(l.substr(comma + 1, l.size() - comma - 2));
        Rational d = x + y - t;
        f[i] = -(d * d);
    }
    return f;
}

Poset quarter_grid() {
    Poset axis = unit_grid_chain(4);
    return Poset::product(axis, axis);
}

}  // namespace

TEST_CASE("argmax basics") {
    Poset p = Poset::chain({"0", "1", "2"});
    ObjectiveTable constant(3, Rational(5));
    CHECK(argmax(p, p.full_set(), constant) == p.full_set());
    CHECK_THROWS_AS(argmax(p, Bitset(3), constant), EmptyDomainError);
    ObjectiveTable peak{Rational(0), Rational(2), Rational(1)};
    CHECK(argmax(p, p.full_set(), peak) == Bitset::of(3, {1}));
}

TEST_CASE("kinked chain objective has its peak at one half") {
    // u1(x) = 2-x below 1/2, 3-x from 1/2 on, over {0,1/4,1/2,3/4,1}
    Poset chain = unit_grid_chain(4);
    ObjectiveTable u1{Rational(2), Rational(7, 4), Rational(5, 2), Rational(9, 4), Rational(2)};
    CHECK(argmax(chain, chain.full_set(), u1) == Bitset::of(5, {2}));
}

TEST_CASE("quasi-supermodularity") {
    Poset diamond = Poset::from_relation(
        {"bot", "l", "r", "top"}, {{"bot", "l"}, {"bot", "r"}, {"l", "top"}, {"r", "top"}});
    ObjectiveTable valley{Rational(0), Rational(1), Rational(1), Rational(0)};
    CHECK(!quasi_supermodular(diamond, valley));
    ObjectiveTable rising{Rational(0), Rational(1), Rational(1), Rational(2)};
    CHECK(quasi_supermodular(diamond, rising));

    Poset chain = Poset::chain({"0", "1", "2", "3", "4"});
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        Rng sub = rng.fork(t);
        CHECK(quasi_supermodular(chain, gen::random_table(sub, chain)));
    }
    CHECK_THROWS_AS(quasi_supermodular(Poset::antichain({"a", "b"}), ObjectiveTable(2)),
                    NotLatticeError);
}

TEST_CASE("supermodular tables on the square are quasi-supermodular") {
    Poset grid = Poset::product(Poset::chain({"0", "1"}), Poset::chain({"0", "1"}));
    // f(x,y) = x*y is supermodular
    ObjectiveTable f(4, Rational(0));
    f[*grid.index_of("(1,1)")] = Rational(1);
    CHECK(quasi_supermodular(grid, f));
}

TEST_CASE("reflexivity of the dominance kinds") {
    Poset grid = quarter_grid();
    // the max-form kinds are reflexive for every table
    ObjectiveTable u = ridge_table(grid, Rational(1, 4));
    for (DominanceKind k : {DominanceKind::SingleCrossing, DominanceKind::Weak,
                            DominanceKind::WeakInterval, DominanceKind::QSInterval}) {
        CHECK(dominates(grid, k, u, u));
    }
    // the join-form kinds additionally need complementarity of the table
    // itself; the ridge fails it (its maximizer sets are not sublattices)
    CHECK(!dominates(grid, DominanceKind::MS, u, u));
    CHECK(!dominates(grid, DominanceKind::Interval, u, u));
    ObjectiveTable additive(grid.size(), Rational(0));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const std::string& l = grid.label(i);
        auto comma = l.find(',');
        additive[i] = Rational::parse(l.substr(1, comma - 1)) +
                      Rational::parse(l.substr(comma + 1, l.size() - comma - 2));
    }
    for (DominanceKind k :
         {DominanceKind::SingleCrossing, DominanceKind::MS, DominanceKind::Weak,
          DominanceKind::WeakInterval, DominanceKind::Interval, DominanceKind::QSInterval}) {
        CHECK(dominates(grid, k, additive, additive));
    }
}

TEST_CASE("parallel ridge shift: weak interval dominance without weak dominance") {
    Poset grid = quarter_grid();
    ObjectiveTable u = ridge_table(grid, Rational(1, 4));
    ObjectiveTable v = ridge_table(grid, Rational(3, 4));
    CHECK(dominates(grid, DominanceKind::WeakInterval, v, u));
    CHECK(!dominates(grid, DominanceKind::Weak, v, u));

    // some sublattice witness exists
    auto w = wmcs_witness_search(grid, v, u, DomainFamily::Sublattices,
                                 order::SetOrderMode::Weak);
    REQUIRE(w.has_value());
    CHECK(!order::weak_dominates(grid, w->max_v, w->max_u));

    // and the canonical four-point one: {x', x'', meet, join} with
    // x' = (1/4,0) on the low ridge and x'' = (0,3/4) on the high ridge
    Bitset z = grid.subset_of({"(1/4,0)", "(0,3/4)", "(0,0)", "(1/4,3/4)"});
    CHECK(order::is_sublattice(grid, z));
    Bitset mzu = argmax(grid, z, u);
    Bitset mzv = argmax(grid, z, v);
    CHECK(mzu == grid.subset_of({"(1/4,0)"}));
    CHECK(mzv == grid.subset_of({"(0,3/4)"}));
    CHECK(!order::weak_dominates(grid, mzv, mzu));

    // no witness over subintervals
    CHECK(!wmcs_witness_search(grid, v, u, DomainFamily::Subintervals,
                               order::SetOrderMode::Weak)
               .has_value());

    // full-grid maximizer sets: weak but not strong order, not sublattices
    Bitset mu = argmax(grid, grid.full_set(), u);
    Bitset mv = argmax(grid, grid.full_set(), v);
    CHECK(order::weak_dominates(grid, mv, mu));
    CHECK(!order::strong_dominates(grid, mv, mu));
    CHECK(!order::is_sublattice(grid, mu));
    CHECK(!order::is_sublattice(grid, mv));
}

TEST_CASE("chain equivalences: weak == single crossing, weak interval == interval") {
    Poset chain = Poset::chain({"0", "1", "2", "3", "4", "5"});
    Rng rng(31);
    for (int t = 0; t < 500; ++t) {
        Rng sub = rng.fork(t);
        ObjectiveTable u = gen::random_table(sub, chain, 4);
        ObjectiveTable v = gen::random_table(sub, chain, 4);
        CHECK(dominates(chain, DominanceKind::Weak, v, u) ==
              dominates(chain, DominanceKind::SingleCrossing, v, u));
        CHECK(dominates(chain, DominanceKind::WeakInterval, v, u) ==
              dominates(chain, DominanceKind::Interval, v, u));
        CHECK(dominates(chain, DominanceKind::Interval, v, u) ==
              dominates(chain, DominanceKind::QSInterval, v, u));
    }
}

TEST_CASE("implication lattice of dominance kinds") {
    Rng rng(77);
    int ms_hits = 0, weak_hits = 0, interval_hits = 0;
    for (int t = 0; t < 400; ++t) {
        Rng sub = rng.fork(t);
        Poset p = gen::random_lattice(sub, 6);
        ObjectiveTable u = gen::random_table(sub, p, 3);
        ObjectiveTable v = gen::random_table(sub, p, 3);
        if (dominates(p, DominanceKind::MS, v, u)) {
            ++ms_hits;
            CHECK(dominates(p, DominanceKind::Weak, v, u));
        }
        if (dominates(p, DominanceKind::Weak, v, u)) {
            ++weak_hits;
            CHECK(dominates(p, DominanceKind::WeakInterval, v, u));
        }
        if (dominates(p, DominanceKind::Interval, v, u)) {
            ++interval_hits;
            CHECK(dominates(p, DominanceKind::WeakInterval, v, u));
        }
        // the same-table diagonal guarantees hits
        CHECK(dominates(p, DominanceKind::WeakInterval, u, u));
    }
    CHECK(ms_hits > 0);
    CHECK(weak_hits > 0);
    CHECK(interval_hits > 0);
}

TEST_CASE("maximizer-shift equivalences on small lattices") {
    Rng rng(13);
    for (int t = 0; t < 60; ++t) {
        Rng sub = rng.fork(t);
        Poset p = gen::random_lattice(sub, 6);
        ObjectiveTable u = gen::random_table(sub, p, 3);
        ObjectiveTable v = sub.coin(0.3) ? u : gen::random_table(sub, p, 3);

        bool weak = dominates(p, DominanceKind::Weak, v, u);
        bool no_sublattice_witness = !wmcs_witness_search(p, v, u, DomainFamily::Sublattices,
                                                          order::SetOrderMode::Weak)
                                          .has_value();
        CHECK(weak == no_sublattice_witness);

        bool weak_interval = dominates(p, DominanceKind::WeakInterval, v, u);
        bool no_interval_witness = !wmcs_witness_search(p, v, u, DomainFamily::Subintervals,
                                                        order::SetOrderMode::Weak)
                                        .has_value();
        CHECK(weak_interval == no_interval_witness);

        bool interval = dominates(p, DominanceKind::Interval, v, u);
        bool no_ss_witness = !wmcs_witness_search(p, v, u, DomainFamily::Subintervals,
                                                  order::SetOrderMode::Strong)
                                  .has_value();
        CHECK(interval == no_ss_witness);
    }
}

TEST_CASE("qs interval dominance with i-quasi-supermodularity forces strong shifts") {
    Rng rng(41);
    int hits = 0;
    for (int t = 0; t < 300; ++t) {
        Rng sub = rng.fork(t);
        Poset p = gen::random_lattice(sub, 6);
        ObjectiveTable u = gen::random_table(sub, p, 3);
        ObjectiveTable v = sub.coin(0.4) ? u : gen::random_table(sub, p, 3);
        if (!dominates(p, DominanceKind::QSInterval, v, u)) continue;
        if (!i_quasi_supermodular(p, u) && !i_quasi_supermodular(p, v)) continue;
        ++hits;
        CHECK(!wmcs_witness_search(p, v, u, DomainFamily::Subintervals,
                                   order::SetOrderMode::Strong)
                   .has_value());
    }
    CHECK(hits > 10);
}

TEST_CASE("centered ridge maximizes on the half-sum anti-diagonal") {
    Poset grid = quarter_grid();
    ObjectiveTable u = ridge_table(grid, Rational(1, 2));
    CHECK(argmax(grid, grid.full_set(), u) ==
          grid.subset_of({"(0,1/2)", "(1/4,1/4)", "(1/2,0)"}));
}

TEST_CASE("the four-point fallback family still finds ridge witnesses") {
    Poset grid = quarter_grid();
    ObjectiveTable u = ridge_table(grid, Rational(1, 4));
    ObjectiveTable v = ridge_table(grid, Rational(3, 4));
    // force the fallback by dropping the exhaustive limit below |X|
    auto w = wmcs_witness_search(grid, v, u, DomainFamily::Sublattices,
                                 order::SetOrderMode::Weak, 1u << 22, 2);
    REQUIRE(w.has_value());
    CHECK(w->domain.count() <= 4);
    CHECK(!order::weak_dominates(grid, w->max_v, w->max_u));
}

TEST_CASE("witness search respects its budget") {
    Poset grid = quarter_grid();
    ObjectiveTable u = ridge_table(grid, Rational(1, 4));
    ObjectiveTable v = ridge_table(grid, Rational(3, 4));
    CHECK_THROWS_AS(wmcs_witness_search(grid, v, u, DomainFamily::Subintervals,
                                        order::SetOrderMode::Weak, 3),
                    BudgetExceeded);
}
