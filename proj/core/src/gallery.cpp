#include "wmcs/gallery.hpp"

namespace wmcs::fp {

namespace {

Correspondence from_label_map(
    const Poset& p, const std::vector<std::pair<std::string, std::vector<std::string>>>& rows) {
    Correspondence f;
    f.image.assign(p.size(), Bitset(p.size()));
    for (const auto& [from, tos] : rows) {
        f.image[*p.index_of(from)] = p.subset_of(tos);
    }
    return f;
}

Poset grid_poset(int nx, int ny) {
    std::vector<std::string> xs, ys;
    for (int i = 1; i <= nx; ++i) xs.push_back(std::to_string(i));
    for (int j = 1; j <= ny; ++j) ys.push_back(std::to_string(j));
    return Poset::product(Poset::chain(xs), Poset::chain(ys));
}

bool fp_equals(const Poset& p, const Correspondence& f, const std::vector<std::string>& labels) {
    Bitset expected = p.subset_of(labels);
    Bitset got(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (f.image[x].test(x)) got.set(x);
    }
    return got == expected;
}

GalleryInstance swap_no_xplus() {
    Poset p = Poset::antichain({"(0,1)", "(1,0)"});
    Correspondence f = from_label_map(p, {{"(0,1)", {"(1,0)"}}, {"(1,0)", {"(0,1)"}}});
    GalleryInstance g{"swap-no-xplus", std::move(p), std::move(f), {}};
    g.facts = {
        {"X+ is empty", [](const Poset& p, const Correspondence& f) {
             return x_plus(p, f).none();
         }},
        {"X- is empty", [](const Poset& p, const Correspondence& f) {
             return x_minus(p, f).none();
         }},
        {"monotonicity holds vacuously on the antichain",
         [](const Poset& p, const Correspondence& f) {
             auto c = classify(p, f);
             return c.uws && c.lws;
         }},
        {"no fixed point", [](const Poset& p, const Correspondence& f) {
             return fixed_points(p, f).none();
         }},
    };
    return g;
}

GalleryInstance three_point_no_uws() {
    Poset p = Poset::from_relation({"(0,0)", "(0,1)", "(1,0)"},
                                   {{"(0,0)", "(0,1)"}, {"(0,0)", "(1,0)"}});
    Correspondence f = from_label_map(p, {{"(0,0)", {"(0,1)", "(1,0)"}},
                                          {"(0,1)", {"(1,0)"}},
                                          {"(1,0)", {"(0,1)"}}});
    GalleryInstance g{"three-point-no-uws", std::move(p), std::move(f), {}};
    g.facts = {
        {"lower weak set monotone", [](const Poset& p, const Correspondence& f) {
             return classify(p, f).lws;
         }},
        {"not upper weak set monotone", [](const Poset& p, const Correspondence& f) {
             return !classify(p, f).uws;
         }},
        {"X+ is nonempty", [](const Poset& p, const Correspondence& f) {
             return x_plus(p, f).any();
         }},
        {"no fixed point", [](const Poset& p, const Correspondence& f) {
             return fixed_points(p, f).none();
         }},
    };
    return g;
}

// Finite rendering of the map x -> [x,1] for x > 0, 0 -> [1/2,1] on the
// grid {0,1/4,1/2,3/4,1}: upper but not lower monotone, and no walk reaches
// below the least positive fixed point even though the bottom sits under
// every fixed point.
GalleryInstance lws_no_minimal_analogue() {
    Poset p = Poset::chain({"0", "1/4", "1/2", "3/4", "1"});
    Correspondence f;
    f.image.assign(p.size(), Bitset(p.size()));
    for (std::size_t x = 0; x < p.size(); ++x) {
        std::size_t lo = x == 0 ? 2 : x;
        for (std::size_t y = lo; y < p.size(); ++y) f.image[x].set(y);
    }
    GalleryInstance g{"lws-no-minimal-discrete-analogue", std::move(p), std::move(f), {}};
    g.facts = {
        {"upper monotone with nonempty X+", [](const Poset& p, const Correspondence& f) {
             return classify(p, f).in_f_plus();
         }},
        {"not lower weak set monotone", [](const Poset& p, const Correspondence& f) {
             return !classify(p, f).lws;
         }},
        {"fixed points are the positive grid points",
         [](const Poset& p, const Correspondence& f) {
             return fp_equals(p, f, {"1/4", "1/2", "3/4", "1"});
         }},
        {"the bottom lies below all fixed points yet is not in X-",
         [](const Poset& p, const Correspondence& f) { return !x_minus(p, f).test(0); }},
    };
    return g;
}

GalleryInstance figure2() {
    Poset p = grid_poset(3, 2);
    Correspondence f = from_label_map(p, {{"(1,1)", {"(1,2)", "(2,1)"}},
                                          {"(2,1)", {"(1,2)", "(3,2)"}},
                                          {"(1,2)", {"(2,1)", "(3,2)"}},
                                          {"(2,2)", {"(2,2)", "(3,2)"}},
                                          {"(3,1)", {"(3,2)"}},
                                          {"(3,2)", {"(3,2)"}}});
    GalleryInstance g{"figure2", std::move(p), std::move(f), {}};
    g.facts = {
        {"both upper and lower monotone", [](const Poset& p, const Correspondence& f) {
             auto c = classify(p, f);
             return c.in_f_plus() && c.in_f_minus();
         }},
        {"fixed points are (2,2) and (3,2)", [](const Poset& p, const Correspondence& f) {
             return fp_equals(p, f, {"(2,2)", "(3,2)"});
         }},
        {"(2,2) is the unique minimal fixed point",
         [](const Poset& p, const Correspondence& f) {
             Bitset mins = order::minimal_points(p, fixed_points(p, f));
             return mins == Bitset::single(p.size(), *p.index_of("(2,2)"));
         }},
        {"every upward walk from (1,1) ends at (3,2)",
         [](const Poset& p, const Correspondence& f) {
             Bitset reach = reachable_fixed_points(p, f, *p.index_of("(1,1)"), Direction::Up);
             return reach == Bitset::single(p.size(), *p.index_of("(3,2)"));
         }},
    };
    return g;
}

GalleryInstance figure3_supp() {
    Poset p = grid_poset(2, 2);
    Correspondence f = from_label_map(p, {{"(1,1)", {"(1,2)", "(2,1)"}},
                                          {"(2,1)", {"(2,1)", "(2,2)"}},
                                          {"(1,2)", {"(2,2)"}},
                                          {"(2,2)", {"(2,2)"}}});
    GalleryInstance g{"figure3-supp", std::move(p), std::move(f), {}};
    g.facts = {
        {"both upper and lower monotone", [](const Poset& p, const Correspondence& f) {
             auto c = classify(p, f);
             return c.in_f_plus() && c.in_f_minus();
         }},
        {"fixed points are (2,1) and (2,2)", [](const Poset& p, const Correspondence& f) {
             return fp_equals(p, f, {"(2,1)", "(2,2)"});
         }},
        {"minimal-point selection from (1,1) ends at the non-minimal (2,2)",
         [](const Poset& p, const Correspondence& f) {
             SelectionPolicy pol;
             pol.kind = SelectionPolicy::Kind::MinimalPoint;
             auto res = iterate(p, f, *p.index_of("(1,1)"), pol, Direction::Up);
             return res.fixed_point == p.index_of("(2,2)") && res.trace.size() == 3 &&
                    res.trace[1] == *p.index_of("(1,2)");
         }},
        {"both fixed points are reachable from (1,1)",
         [](const Poset& p, const Correspondence& f) {
             Bitset reach = reachable_fixed_points(p, f, *p.index_of("(1,1)"), Direction::Up);
             return reach == p.subset_of({"(2,1)", "(2,2)"});
         }},
    };
    return g;
}

}  // namespace

GalleryInstance gallery(const std::string& name) {
    if (name == "swap-no-xplus") return swap_no_xplus();
    if (name == "three-point-no-uws") return three_point_no_uws();
    if (name == "lws-no-minimal-discrete-analogue") return lws_no_minimal_analogue();
    if (name == "figure2") return figure2();
    if (name == "figure3-supp") return figure3_supp();
    throw UnknownGalleryName("no gallery instance named '" + name + "'");
}

std::vector<std::string> gallery_names() {
    return {"swap-no-xplus", "three-point-no-uws", "lws-no-minimal-discrete-analogue", "figure2",
            "figure3-supp"};
}

std::vector<std::string> verify_gallery(const GalleryInstance& g) {
    std::vector<std::string> failures;
    for (const auto& fact : g.facts) {
        if (!fact.check(g.poset, g.corr)) failures.push_back(fact.description);
    }
    return failures;
}

}  // namespace wmcs::fp
