#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "bideal/fibers.hpp"
#include "bideal/io.hpp"
#include "test_util.hpp"

using namespace bideal;
using testutil::ev;
using testutil::load;

namespace {

ReducedGroebnerBasis gb_of(const IdealPresentation& p) {
    return buchberger(p, TermOrder::degrevlex(p.arity()));
}

std::set<ExponentVector, DegLexLess> member_set(const FiberView& f) {
    std::set<ExponentVector, DegLexLess> s;
    for (const auto& [m, c] : f.members) s.insert(m);
    return s;
}

}  // namespace

TEST_CASE("same_fiber recovers witness scalars") {
    IdealPresentation p = load("i2.ideal");
    ReducedGroebnerBasis gb = gb_of(p);
    auto r = same_fiber(ev({0, 4}), ev({0, 6}), gb);  // y^4 - 9 y^6
    REQUIRE(r.has_value());
    CHECK_FALSE(r->monomial_fiber);
    CHECK(r->lambda == Scalar::from_integer(0, 9));
    auto r2 = same_fiber(ev({0, 4}), ev({0, 7}), gb);  // y^4 - 27 y^7
    REQUIRE(r2.has_value());
    CHECK(r2->lambda == Scalar::from_integer(0, 27));
    CHECK_FALSE(same_fiber(ev({0, 3}), ev({0, 4}), gb).has_value());
    CHECK(same_fiber(ev({2, 0}), ev({2, 0}), gb).has_value());
}

TEST_CASE("finite fibers are explored completely") {
    IdealPresentation p = load("i3.ideal");
    ReducedGroebnerBasis gb = gb_of(p);
    ExplorationCaps caps = default_caps(p, ev({3, 3}));
    CHECK(caps.degree_cap == 32);  // 4 * (largest generator degree 8)

    FiberView f1 = explore_fiber(ev({3, 3}), p, gb, caps);
    CHECK(f1.complete);
    CHECK_FALSE(f1.is_monomial_fiber);
    CHECK(member_set(f1) ==
          std::set<ExponentVector, DegLexLess>{ev({3, 3}), ev({2, 5}), ev({5, 2})});
    for (const auto& [m, c] : f1.members) CHECK(c.is_one());  // pure ideal

    FiberView f2 = explore_fiber(ev({6, 1}), p, gb, caps);
    CHECK(f2.complete);
    CHECK(member_set(f2) == std::set<ExponentVector, DegLexLess>{ev({6, 1}), ev({8, 0})});

    FiberView f3 = explore_fiber(ev({1, 6}), p, gb, caps);
    CHECK(f3.complete);
    CHECK(member_set(f3) == std::set<ExponentVector, DegLexLess>{ev({1, 6}), ev({0, 8})});

    // neighbouring fiber, also finite
    FiberView f4 = explore_fiber(ev({1, 7}), p, gb, caps);
    CHECK(f4.complete);
    CHECK(member_set(f4) == std::set<ExponentVector, DegLexLess>{ev({1, 7}), ev({0, 9})});
}

TEST_CASE("the infinite fiber of x^4 y^3 truncates without being monomial") {
    IdealPresentation p = load("i3.ideal");
    ReducedGroebnerBasis gb = gb_of(p);
    FiberView f = explore_fiber(ev({4, 3}), p, gb, default_caps(p, ev({4, 3})));
    CHECK_FALSE(f.complete);
    CHECK_FALSE(f.is_monomial_fiber);
    CHECK(f.members.size() > 50);
    // spot members on both arms of the fiber
    CHECK(f.members.count(ev({10, 0})) == 1);
    CHECK(f.members.count(ev({0, 11})) == 1);
    CHECK(f.members.count(ev({3, 5})) == 1);
    CHECK(f.members.count(ev({5, 4})) == 1);  // x^4 y^3 shifted by (1,1)
    // every reported member really is in the fiber
    for (const auto& [m, c] : f.members) {
        auto sf = same_fiber(ev({4, 3}), m, gb);
        REQUIRE(sf.has_value());
        CHECK(sf->lambda == c);
    }
}

TEST_CASE("minimal generators of the x^4 y^3 fiber's monomial ideal") {
    // M_{F} = (x^10, x^8 y, x^6 y^2, x^4 y^3, x^3 y^5, x^2 y^7, x y^9, y^11)
    IdealPresentation p = load("i3.ideal");
    ReducedGroebnerBasis gb = gb_of(p);
    std::vector<ExponentVector> expected = {ev({10, 0}), ev({8, 1}), ev({6, 2}),
                                            ev({4, 3}),  ev({3, 5}), ev({2, 7}),
                                            ev({1, 9}),  ev({0, 11})};
    for (const auto& m : expected) CHECK(same_fiber(ev({4, 3}), m, gb).has_value());
    FiberView f = explore_fiber(ev({4, 3}), p, gb, default_caps(p, ev({4, 3})));
    std::set<ExponentVector, DegLexLess> members = member_set(f);
    std::vector<ExponentVector> mins = minimal_monomials(
        std::vector<ExponentVector>(members.begin(), members.end()));
    std::sort(mins.begin(), mins.end(), deg_lex_less);
    std::sort(expected.begin(), expected.end(), deg_lex_less);
    CHECK(mins == expected);
}

TEST_CASE("closed-form fibers of the coefficient ideal") {
    // F_y = {x^{2n} y}, F_{y^3} = {x^n y^3}, F_{y^4} = {x^n y^{4+m}}
    IdealPresentation p = load("i2.ideal");
    ReducedGroebnerBasis gb = gb_of(p);
    ExplorationCaps caps = default_caps(p, ev({0, 1}));
    REQUIRE(caps.degree_cap == 32);

    std::set<ExponentVector, DegLexLess> fy, fy3, fy4;
    for (unsigned long n = 0; 2 * n + 1 <= 32; ++n) fy.insert(ev({2 * n, 1}));
    for (unsigned long n = 0; n + 3 <= 32; ++n) fy3.insert(ev({n, 3}));
    for (unsigned long k = 4; k <= 32; ++k)
        for (unsigned long n = 0; n + k <= 32; ++n) fy4.insert(ev({n, k}));

    FiberView a = explore_fiber(ev({0, 1}), p, gb, caps);
    CHECK_FALSE(a.complete);
    CHECK(member_set(a) == fy);
    FiberView b = explore_fiber(ev({0, 3}), p, gb, caps);
    CHECK(member_set(b) == fy3);
    FiberView c = explore_fiber(ev({0, 4}), p, gb, caps);
    CHECK(member_set(c) == fy4);
    CHECK(c.members.at(ev({0, 6})) == Scalar::from_integer(0, 9));
    CHECK(c.members.at(ev({0, 8})) == Scalar::from_integer(0, 81));
    CHECK(c.members.at(ev({0, 7})) == Scalar::from_integer(0, 27));
    // singleton fibers of the pure powers of x
    FiberView d = explore_fiber(ev({2, 0}), p, gb, caps);
    CHECK(d.complete);
    CHECK(d.members.size() == 1);
}

TEST_CASE("one-variable fiber truncation") {
    IdealPresentation p = load("i1.ideal");  // (x^2 - x^5)
    ReducedGroebnerBasis gb = gb_of(p);
    ExplorationCaps caps = default_caps(p, ev({2}));
    CHECK(caps.degree_cap == 20);
    FiberView f = explore_fiber(ev({2}), p, gb, caps);
    CHECK_FALSE(f.complete);
    CHECK(f.members.size() == 7);  // x^2, x^5, ..., x^20
    for (unsigned long d = 2; d <= 20; d += 3) CHECK(f.members.count(ev({d})) == 1);
}

TEST_CASE("caps are respected") {
    IdealPresentation p = load("i3.ideal");
    ReducedGroebnerBasis gb = gb_of(p);
    // representative above the degree cap: reported alone, incomplete
    FiberView hi = explore_fiber(ev({8, 0}), p, gb, ExplorationCaps{4, 1000});
    CHECK_FALSE(hi.complete);
    CHECK(hi.members.size() == 1);
    // node cap stops growth
    IdealPresentation q = load("i2.ideal");
    ReducedGroebnerBasis qgb = gb_of(q);
    FiberView nc = explore_fiber(ev({0, 4}), q, qgb, ExplorationCaps{32, 5});
    CHECK_FALSE(nc.complete);
    CHECK(nc.members.size() == 5);
    CHECK_THROWS_AS(explore_fiber(ev({0, 4}), q, qgb, ExplorationCaps{32, 0}),
                    usage_error);
}

TEST_CASE("monomial fiber detection across characteristics") {
    IdealPresentation p0 = load("i2.ideal");
    CHECK_FALSE(monomial_fiber(gb_of(p0)).has_value());

    IdealPresentation p3 = load("i2.ideal", 3ul);
    ReducedGroebnerBasis gb3 = gb_of(p3);
    auto mf = monomial_fiber(gb3);
    REQUIRE(mf.has_value());
    REQUIRE(mf->witness_monomials.size() == 1);
    CHECK(mf->witness_monomials[0] == ev({0, 4}));
    CHECK(monomial_fiber_contains(gb3, ev({0, 4})));
    CHECK(monomial_fiber_contains(gb3, ev({3, 7})));
    CHECK_FALSE(monomial_fiber_contains(gb3, ev({0, 3})));
    FiberView f = explore_fiber(ev({0, 4}), p3, gb3, default_caps(p3, ev({0, 4})));
    CHECK(f.is_monomial_fiber);
    CHECK_FALSE(f.complete);

    // char 0 ideal with a mixed-coefficient generator has monomials too
    IdealPresentation p4 = load("i4.ideal");
    ReducedGroebnerBasis gb4 = gb_of(p4);
    REQUIRE(monomial_fiber(gb4).has_value());
    CHECK(monomial_fiber_contains(gb4, ev({4, 3})));
    CHECK(monomial_fiber_contains(gb4, ev({3, 4})));
    CHECK(monomial_fiber_contains(gb4, ev({4, 4})));
    CHECK_FALSE(monomial_fiber_contains(gb4, ev({3, 3})));
    CHECK_FALSE(monomial_fiber_contains(gb4, ev({6, 1})));

    // ... unless the characteristic kills the mixed coefficient
    IdealPresentation p45 = load("i4.ideal", 5ul);
    ReducedGroebnerBasis gb45 = gb_of(p45);
    REQUIRE(monomial_fiber(gb45).has_value());
    for (auto w : {ev({6, 1}), ev({4, 3}), ev({3, 4}), ev({2, 6}), ev({1, 8}),
                   ev({0, 10})})
        CHECK(monomial_fiber_contains(gb45, w));
    CHECK_FALSE(monomial_fiber_contains(gb45, ev({3, 3})));
    FiberView f45 = explore_fiber(ev({6, 1}), p45, gb45, default_caps(p45, ev({6, 1})));
    CHECK(f45.is_monomial_fiber);
}

TEST_CASE("fiber order") {
    IdealPresentation p = load("i3.ideal");
    ReducedGroebnerBasis gb = gb_of(p);
    ExplorationCaps caps = default_caps(p, ev({4, 3}));
    CHECK(fiber_leq(ev({3, 3}), ev({4, 3}), p, gb, caps) == Tri::Yes);
    CHECK(fiber_leq(ev({4, 3}), ev({3, 3}), p, gb, caps) == Tri::No);
    CHECK(fiber_equiv(ev({4, 3}), ev({4, 4}), p, gb, caps) == Tri::Yes);
    CHECK(fiber_equiv(ev({4, 3}), ev({5, 3}), p, gb, caps) == Tri::Yes);
    CHECK(same_fiber(ev({5, 3}), ev({3, 4}), gb).has_value());  // equal fibers even
    CHECK(fiber_equiv(ev({3, 3}), ev({6, 1}), p, gb, caps) == Tri::No);
    CHECK(fiber_equiv(ev({3, 3}), ev({1, 6}), p, gb, caps) == Tri::No);
    CHECK(fiber_equiv(ev({6, 1}), ev({1, 6}), p, gb, caps) == Tri::No);
    // the monomial fiber is maximal
    IdealPresentation p4 = load("i4.ideal");
    ReducedGroebnerBasis gb4 = gb_of(p4);
    ExplorationCaps caps4 = default_caps(p4, ev({4, 3}));
    CHECK(fiber_leq(ev({3, 3}), ev({4, 3}), p4, gb4, caps4) == Tri::Yes);
    CHECK(fiber_leq(ev({4, 3}), ev({3, 3}), p4, gb4, caps4) == Tri::No);
}

TEST_CASE("markov fiber classes of the coefficient ideal") {
    IdealPresentation p = load("i2.ideal");
    ReducedGroebnerBasis gb = gb_of(p);
    FiberClassPoset poset = markov_fiber_classes(p, gb, default_caps(p, ev({0, 1})));
    REQUIRE(poset.reps.size() == 3);  // generators 3 and 4 share the fiber of y^4
    CHECK(poset.reps[0] == ev({2, 1}));
    CHECK(poset.reps[1] == ev({1, 3}));
    CHECK(poset.reps[2] == ev({0, 6}));
    CHECK(poset.rep_generators[2] == std::vector<std::size_t>{2, 3});
    REQUIRE(poset.classes.size() == 3);
    CHECK(poset.totally_ordered());
    CHECK(poset.leq[0][1] == Tri::Yes);
    CHECK(poset.leq[0][2] == Tri::Yes);
    CHECK(poset.leq[1][2] == Tri::Yes);
    // downward comparisons against infinite fibers stay unresolved
    CHECK(poset.leq[1][0] == Tri::Unknown);
    CHECK_FALSE(poset.unknown_pairs.empty());
}

TEST_CASE("markov fiber classes of the incomparable example") {
    IdealPresentation p = load("i3.ideal");
    ReducedGroebnerBasis gb = gb_of(p);
    FiberClassPoset poset = markov_fiber_classes(p, gb, default_caps(p, ev({0, 0})));
    REQUIRE(poset.reps.size() == 3);
    REQUIRE(poset.classes.size() == 3);
    CHECK_FALSE(poset.totally_ordered());
    CHECK(poset.unknown_pairs.empty());  // all fibers finite, everything decided
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            if (a != b) CHECK(poset.class_leq(a, b) == Tri::No);
}

TEST_CASE("gamma graph of finite fibers") {
    IdealPresentation p = load("i3.ideal");
    ReducedGroebnerBasis gb = gb_of(p);
    ExplorationCaps caps = default_caps(p, ev({3, 3}));
    FiberView f = explore_fiber(ev({3, 3}), p, gb, caps);
    GammaGraph g = gamma_graph(f, p, gb, caps);
    CHECK(g.vertices.size() == 3);
    CHECK(g.edges.empty());  // no generator fiber lies strictly below
    CHECK(g.below.generators.empty());

    FiberView f61 = explore_fiber(ev({6, 1}), p, gb, caps);
    GammaGraph g61 = gamma_graph(f61, p, gb, caps);
    CHECK(g61.vertices.size() == 2);
    CHECK(g61.edges.empty());

    // an incomplete fiber is rejected
    FiberView trunc = explore_fiber(ev({4, 3}), p, gb, caps);
    CHECK_THROWS_AS(gamma_graph(trunc, p, gb, caps), usage_error);
}

TEST_CASE("gamma graph with a nonempty below-subideal") {
    // fiber of x^7 y in i3: {x^7 y, x^9}; the fiber of x^8 - x^6 y sits
    // strictly below, and its moves connect the two members.
    IdealPresentation p = load("i3.ideal");
    ReducedGroebnerBasis gb = gb_of(p);
    ExplorationCaps caps = default_caps(p, ev({7, 1}));
    FiberView f = explore_fiber(ev({7, 1}), p, gb, caps);
    REQUIRE(f.complete);
    REQUIRE(f.members.size() == 2);
    GammaGraph g = gamma_graph(f, p, gb, caps);
    CHECK(g.below.generators.size() == 1);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.vertices[g.edges[0].first] == ev({7, 1}));
    CHECK(g.vertices[g.edges[0].second] == ev({9, 0}));
}

TEST_CASE("monomial indispensability by fiber conditions") {
    IdealPresentation p = load("i3.ideal");
    ReducedGroebnerBasis gb = gb_of(p);
    ExplorationCaps caps = default_caps(p, ev({0, 0}));

    auto yes = [&](std::initializer_list<unsigned long> u) {
        IndispensableMonomialCheck c = check_indispensable_monomial(ev(u), p, gb, caps);
        CHECK(c.verdict == Tri::Yes);
        CHECK(c.cond_two_members == Tri::Yes);
        CHECK(c.cond_isolated == Tri::Yes);
        CHECK(c.cond_divisors == Tri::Yes);
        CHECK(c.support_route);
    };
    yes({3, 3});
    yes({6, 1});
    yes({1, 6});
    yes({8, 0});

    IndispensableMonomialCheck c71 =
        check_indispensable_monomial(ev({7, 1}), p, gb, caps);
    CHECK(c71.verdict == Tri::No);
    CHECK(c71.cond_isolated == Tri::No);  // edge to x^9 over the fiber below
    CHECK_FALSE(c71.support_route);

    // x^4 y^3: every generator fiber lies strictly below, so its whole fiber
    // is one component
    IndispensableMonomialCheck c43 =
        check_indispensable_monomial(ev({4, 3}), p, gb, caps);
    CHECK(c43.verdict == Tri::No);
    CHECK(c43.cond_isolated == Tri::No);
    CHECK_FALSE(c43.support_route);
}

TEST_CASE("monomial indispensability decided on an infinite fiber") {
    IdealPresentation p = load("i1.ideal");
    ReducedGroebnerBasis gb = gb_of(p);
    IndispensableMonomialCheck c =
        check_indispensable_monomial(ev({2}), p, gb, default_caps(p, ev({2})));
    CHECK(c.verdict == Tri::Yes);  // conclusive although the fiber truncates
    CHECK(c.cond_two_members == Tri::Yes);
    CHECK(c.cond_isolated == Tri::Yes);
    CHECK(c.cond_divisors == Tri::Yes);
    CHECK(c.support_route);

    IndispensableMonomialCheck c3 =
        check_indispensable_monomial(ev({3}), p, gb, default_caps(p, ev({3})));
    CHECK(c3.verdict == Tri::No);
    CHECK_FALSE(c3.support_route);
}

TEST_CASE("fiber membership matches normal-form bucketing") {
    // Exhaustive cross-check on low degrees: u, v in one explored fiber
    // exactly when their normal forms match.
    for (auto [name, chr] :
         std::vector<std::pair<const char*, unsigned long>>{{"i2.ideal", 0},
                                                            {"i3.ideal", 0},
                                                            {"i4.ideal", 5}}) {
        IdealPresentation p = load(name, chr ? std::optional<unsigned long>(chr)
                                             : std::nullopt);
        ReducedGroebnerBasis gb = gb_of(p);
        ExplorationCaps caps{32, 100000};
        for (unsigned long a = 0; a <= 7; ++a)
            for (unsigned long b = 0; a + b <= 7; ++b) {
                ExponentVector u = ev({a, b});
                FiberView f = explore_fiber(u, p, gb, caps);
                for (unsigned long c = 0; c <= 7; ++c)
                    for (unsigned long d = 0; c + d <= 7; ++d) {
                        ExponentVector v = ev({c, d});
                        bool bucket = same_fiber(u, v, gb).has_value();
                        bool found = f.members.count(v) == 1 ||
                                     (f.is_monomial_fiber &&
                                      monomial_fiber_contains(gb, v));
                        // found implies bucket always; the converse holds here
                        // because the caps exceed every connecting path
                        CHECK(bucket == found);
                    }
            }
    }
}
