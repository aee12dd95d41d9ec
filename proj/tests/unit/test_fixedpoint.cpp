#include <doctest.h>

#include "wmcs/gallery.hpp"
#include "wmcs/gen.hpp"

using namespace wmcs;
using namespace wmcs::fp;

TEST_CASE("identity correspondence fixes everything") {
    Poset p = Poset::chain({"0", "1", "2"});
    Correspondence f = Correspondence::identity(p);
    CHECK(x_plus(p, f) == p.full_set());
    CHECK(x_minus(p, f) == p.full_set());
    CHECK(fixed_points(p, f) == p.full_set());
    auto res = iterate(p, f, 1, SelectionPolicy::least(), Direction::Up);
    CHECK(res.fixed_point == 1);
    CHECK(res.trace == std::vector<std::size_t>{1});
}

TEST_CASE("constant correspondences are monotone both ways") {
    Poset p = Poset::chain({"0", "1", "2"});
    Correspondence f = Correspondence::constant(p, Bitset::of(3, {0, 2}));
    MonotoneClass c = classify(p, f);
    CHECK(c.uws);
    CHECK(c.lws);
    CHECK(c.in_f_plus());
    CHECK(c.in_f_minus());
}

TEST_CASE("every gallery instance verifies its stated facts") {
    for (const auto& name : gallery_names()) {
        GalleryInstance g = gallery(name);
        auto failures = verify_gallery(g);
        for (const auto& f : failures) {
            FAIL_CHECK(name << ": " << f);
        }
    }
    CHECK_THROWS_AS(gallery("unknown"), UnknownGalleryName);
}

TEST_CASE("swap instance has empty starting sets") {
    GalleryInstance g = gallery("swap-no-xplus");
    CHECK(x_plus(g.poset, g.corr).none());
    CHECK(fixed_points(g.poset, g.corr).none());
    CHECK_THROWS_AS(iterate(g.poset, g.corr, 0, SelectionPolicy::least(), Direction::Up),
                    NotInStartSetError);
}

TEST_CASE("figure2 walk reaches only the top fixed point under every policy") {
    GalleryInstance g = gallery("figure2");
    std::size_t start = *g.poset.index_of("(1,1)");
    std::size_t top = *g.poset.index_of("(3,2)");
    for (auto kind : {SelectionPolicy::Kind::LeastIndex, SelectionPolicy::Kind::GreatestIndex,
                      SelectionPolicy::Kind::MinimalPoint, SelectionPolicy::Kind::MaximalPoint}) {
        SelectionPolicy pol;
        pol.kind = kind;
        auto res = iterate(g.poset, g.corr, start, pol, Direction::Up);
        CHECK(res.fixed_point == top);
    }
    CHECK(reachable_fixed_points(g.poset, g.corr, start, Direction::Up) ==
          Bitset::single(g.poset.size(), top));
}

TEST_CASE("scripted selection follows the script") {
    GalleryInstance g = gallery("figure3-supp");
    SelectionPolicy pol;
    pol.kind = SelectionPolicy::Kind::Scripted;
    pol.script = {*g.poset.index_of("(2,1)")};
    auto res = iterate(g.poset, g.corr, *g.poset.index_of("(1,1)"), pol, Direction::Up);
    CHECK(res.fixed_point == g.poset.index_of("(2,1)"));  // the minimal one this time
}

TEST_CASE("monotone correspondences have fixed points with extremal members") {
    Rng rng(4242);
    std::size_t plus_cases = 0, minus_cases = 0;
    for (int t = 0; t < 500; ++t) {
        Rng sub = rng.fork(t);
        Poset p = gen::random_poset(sub, 10);
        auto shape = sub.coin() ? gen::CorrShape::UpClosed : gen::CorrShape::DownClosed;
        Correspondence f = gen::random_correspondence(sub, p, shape);
        MonotoneClass c = classify(p, f);
        if (!c.in_f_plus() && !c.in_f_minus()) continue;
        Bitset fps = fixed_points(p, f);  // asserts nonemptiness internally
        REQUIRE(fps.any());
        if (c.in_f_plus()) {
            ++plus_cases;
            CHECK(order::maximal_points(p, fps).any());
        }
        if (c.in_f_minus()) {
            ++minus_cases;
            CHECK(order::minimal_points(p, fps).any());
        }
    }
    CHECK(plus_cases > 50);
    CHECK(minus_cases > 50);
}

TEST_CASE("iteration traces strictly increase and stay within the chain bound") {
    Rng rng(515);
    std::size_t walks = 0;
    for (int t = 0; t < 300; ++t) {
        Rng sub = rng.fork(t);
        Poset p = gen::random_poset(sub, 8);
        Correspondence f = gen::random_correspondence(sub, p, gen::CorrShape::UpClosed);
        Bitset starts = x_plus(p, f);
        if (!classify(p, f).in_f_plus()) continue;
        for (std::size_t x = starts.first(); x < p.size(); x = starts.next(x + 1)) {
            auto res = iterate(p, f, x, SelectionPolicy::least(), Direction::Up);
            REQUIRE(res.fixed_point.has_value());
            CHECK(res.trace.size() <= p.size());
            for (std::size_t k = 1; k < res.trace.size(); ++k) {
                CHECK(p.lt(res.trace[k - 1], res.trace[k]));
            }
            ++walks;
        }
    }
    CHECK(walks > 100);
}

TEST_CASE("upward lifts exist for dominating monotone pairs") {
    Rng rng(616);
    std::size_t lifted = 0;
    for (int t = 0; t < 500; ++t) {
        Rng sub = rng.fork(t);
        Poset p = gen::random_poset(sub, 8);
        auto [low, high] = gen::random_uws_dominating_pair(sub, p);
        Bitset fps = fixed_points(p, low);
        if (fps.none()) continue;
        if (!classify(p, high).in_f_plus()) continue;
        for (std::size_t x = fps.first(); x < p.size(); x = fps.next(x + 1)) {
            std::size_t y = cs_lift(p, low, high, x, LiftMode::Upper);
            CHECK(p.leq(x, y));
            CHECK(high.image[y].test(y));
            ++lifted;
        }
    }
    CHECK(lifted > 200);
}

TEST_CASE("lift rejects broken hypotheses with a named premise") {
    GalleryInstance g = gallery("figure2");
    Correspondence shrunk = g.corr;
    // map everything into the bottom: not uws above the original
    shrunk.image.assign(g.poset.size(), Bitset::single(g.poset.size(), 0));
    std::size_t fixed = *g.poset.index_of("(2,2)");
    CHECK_THROWS_AS(cs_lift(g.poset, g.corr, shrunk, fixed, LiftMode::Upper), HypothesisError);
}

TEST_CASE("figure2 lift of the minimal fixed point under an upward shift") {
    GalleryInstance g = gallery("figure2");
    Correspondence up = Correspondence::constant(
        g.poset, Bitset::single(g.poset.size(), *g.poset.index_of("(3,2)")));
    std::size_t lifted =
        cs_lift(g.poset, g.corr, up, *g.poset.index_of("(2,2)"), LiftMode::Upper);
    CHECK(lifted == *g.poset.index_of("(3,2)"));
}

TEST_CASE("downward lifts exist for the mirrored dominating pairs") {
    Rng rng(626);
    std::size_t descended = 0;
    for (int t = 0; t < 400; ++t) {
        Rng sub = rng.fork(t);
        Poset p = gen::random_poset(sub, 8);
        auto pair = gen::random_lws_dominating_pair(sub, p);
        Bitset fps = fixed_points(p, pair.high);
        if (fps.none() || !classify(p, pair.low).in_f_minus()) continue;
        for (std::size_t x = fps.first(); x < p.size(); x = fps.next(x + 1)) {
            std::size_t y = cs_lift(p, pair.high, pair.low, x, LiftMode::Lower);
            CHECK(p.leq(y, x));
            CHECK(pair.low.image[y].test(y));
            ++descended;
        }
    }
    CHECK(descended > 100);
}

TEST_CASE("join-shift maps move fixed points up in the full weak order") {
    Rng rng(727);
    for (int t = 0; t < 200; ++t) {
        Rng sub = rng.fork(t);
        Poset p = gen::random_lattice(sub, 8);
        auto pair = gen::random_join_shift_pair(sub, p);
        // both maps are monotone in both senses with nonempty start sets
        CHECK(classify(p, pair.low).in_f_plus());
        CHECK(classify(p, pair.high).in_f_minus());
        Bitset fp_low = fixed_points(p, pair.low);
        Bitset fp_high = fixed_points(p, pair.high);
        CHECK(fp_low == p.upset(pair.c_low));
        CHECK(fp_high == p.upset(pair.c_high));
        CHECK(order::weak_dominates(p, fp_high, fp_low));
    }
}

TEST_CASE("strong set monotonicity implies both weak halves") {
    Rng rng(717);
    std::size_t ss_cases = 0;
    for (int t = 0; t < 400; ++t) {
        Rng sub = rng.fork(t);
        Poset p = gen::random_lattice(sub, 6);
        Correspondence f = gen::random_correspondence(sub, p, gen::CorrShape::Raw);
        MonotoneClass c = classify(p, f);
        if (c.ss.has_value() && *c.ss) {
            ++ss_cases;
            CHECK(c.uws);
            CHECK(c.lws);
        }
    }
    CHECK(ss_cases > 5);
}

TEST_CASE("dead ends are reported, not thrown, for non-monotone walks") {
    // 0 < 1, 0 < 2, with 1 and 2 incomparable; F(0)={1}, F(1)={2}, F(2)={2}
    Poset p = Poset::from_relation({"0", "1", "2"}, {{"0", "1"}, {"0", "2"}});
    Correspondence f;
    f.image = {Bitset::of(3, {1}), Bitset::of(3, {2}), Bitset::of(3, {2})};
    auto res = iterate(p, f, 0, SelectionPolicy::least(), Direction::Up);
    CHECK(res.dead_end);
    CHECK(!res.fixed_point.has_value());
    CHECK(res.trace == std::vector<std::size_t>{0, 1});
}
