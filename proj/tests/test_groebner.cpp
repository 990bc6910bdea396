#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>

#include "bideal/groebner.hpp"
#include "bideal/io.hpp"
#include "test_util.hpp"

using namespace bideal;
using testutil::el;
using testutil::ev;
using testutil::load;
using testutil::mono;

namespace {

struct RandomPick : ReduceStrategy {
    mutable std::mt19937_64 rng;
    explicit RandomPick(unsigned long seed) : rng(seed) {}
    std::size_t pick(std::size_t candidates) const override {
        return std::uniform_int_distribution<std::size_t>(0, candidates - 1)(rng);
    }
};

}  // namespace

TEST_CASE("principal ideal under lex") {
    IdealPresentation p = parse_ideal("field Q\nvars x y\nx - y\n");
    ReducedGroebnerBasis gb = buchberger(p, TermOrder::lex(2));
    REQUIRE(gb.elements.size() == 1);
    CHECK(gb.elements[0] == el("x - y", p));
    auto nf = normal_form(ev({1, 0}), gb);
    REQUIRE(nf.has_value());
    CHECK(nf->expo == ev({0, 1}));
    CHECK(nf->coeff.is_one());
}

TEST_CASE("reduced basis is unique across presentations and generator orders") {
    IdealPresentation p = load("i3.ideal");
    TermOrder o = TermOrder::degrevlex(2);
    ReducedGroebnerBasis gb = buchberger(p, o);
    // permuted generators
    std::vector<BinomialElement> rev(p.generators.rbegin(), p.generators.rend());
    IdealPresentation q = make_presentation(0, p.vars, rev);
    CHECK(buchberger(q, o).elements == gb.elements);
    // redundant extra element x*(first generator)
    std::vector<BinomialElement> extra = p.generators;
    const BinomialElement& g0 = p.generators[0];
    extra.push_back(normalize(Scalar::one(0), sum(g0.lead(), ev({1, 0})), g0.trail_coeff(),
                              sum(g0.trail(), ev({1, 0})), o));
    IdealPresentation r = make_presentation(0, p.vars, extra);
    CHECK(buchberger(r, o).elements == gb.elements);
    // basis properties: monic, sorted by increasing lead, lead antichain
    for (std::size_t i = 0; i + 1 < gb.elements.size(); ++i)
        CHECK(o.less(gb.elements[i].lead(), gb.elements[i + 1].lead()));
    for (std::size_t i = 0; i < gb.elements.size(); ++i)
        for (std::size_t j = 0; j < gb.elements.size(); ++j)
            if (i != j) CHECK_FALSE(divides(gb.elements[i].lead(), gb.elements[j].lead()));
}

TEST_CASE("characteristic changes the monomial content of i2") {
    IdealPresentation p0 = load("i2.ideal");
    ReducedGroebnerBasis gb0 = buchberger(p0, TermOrder::degrevlex(2));
    CHECK_FALSE(contains_monomial(gb0).has_value());

    IdealPresentation p3 = load("i2.ideal", 3ul);
    ReducedGroebnerBasis gb3 = buchberger(p3, TermOrder::degrevlex(2));
    auto m = contains_monomial(gb3);
    REQUIRE(m.has_value());
    CHECK(*m == ev({0, 4}));  // y^4 survives as a monomial generator mod 3
    CHECK_FALSE(normal_form(ev({0, 4}), gb3).has_value());
    CHECK_FALSE(normal_form(ev({0, 5}), gb3).has_value());
    CHECK(normal_form(ev({0, 3}), gb3).has_value());
}

TEST_CASE("normal forms modulo i3") {
    IdealPresentation p = load("i3.ideal");
    ReducedGroebnerBasis gb = buchberger(p, TermOrder::degrevlex(2));
    auto nf = normal_form(ev({8, 0}), gb);  // x^8 -> x^6 y
    REQUIRE(nf.has_value());
    CHECK(nf->expo == ev({6, 1}));
    CHECK(nf->coeff.is_one());
    // standard monomial stays put
    auto st = normal_form(ev({3, 2}), gb);
    REQUIRE(st.has_value());
    CHECK(st->expo == ev({3, 2}));
}

TEST_CASE("membership") {
    IdealPresentation p3 = load("i3.ideal");
    ReducedGroebnerBasis gb3 = buchberger(p3, TermOrder::degrevlex(2));
    CHECK(member(el("x^7*y - x^9", p3), gb3));
    CHECK(member(el("x^2*y^5 - x^5*y^2", p3), gb3));  // sum of two generators
    CHECK_FALSE(member(el("x - y", p3), gb3));
    CHECK_FALSE(member(el("x^6*y - 2*x^8", p3), gb3));  // wrong scalar
    CHECK(member(BinomialElement::zero(2), gb3));

    IdealPresentation p2 = load("i2.ideal");
    ReducedGroebnerBasis gb2 = buchberger(p2, TermOrder::degrevlex(2));
    // The fiber scalars of i2 multiply along paths: y^4 ~ 9*y^6 and
    // y^5 ~ 9*y^7 ~ 3*y^8 ~ (1/27)*y^4, so the witness for y^4 ~ y^5 is 3,
    // not 1. Explicitly, (1 - 3y + 9y^2)*(y^4 - 9y^6) - 27*(y^7 - 3y^8)
    // equals y^4 - 3y^5.
    CHECK(member(el("y^4 - 3*y^5", p2), gb2));
    CHECK_FALSE(member(el("y^4 - y^5", p2), gb2));
    CHECK_FALSE(member(el("y^3 - y^4", p2), gb2));
}

TEST_CASE("ideal equality: the three-element presentation of i2") {
    IdealPresentation p = load("i2.ideal");
    IdealPresentation q =
        parse_ideal("field Q\nvars x y\ny - x^2*y\ny^3 - x*y^3\ny^4 - 3*y^5\n");
    TermOrder o = TermOrder::degrevlex(2);
    CHECK(ideal_equal(p, q, o));
    CHECK(ideal_equal(q, p, o));
    // With the scalar 1 instead of 3 the third generator leaves the ideal:
    // a pure-difference ideal contains no monomials, so it can match i2 in
    // neither direction.
    IdealPresentation q1 =
        parse_ideal("field Q\nvars x y\ny - x^2*y\ny^3 - x*y^3\ny^4 - y^5\n");
    CHECK_FALSE(ideal_equal(p, q1, o));
    CHECK_FALSE(ideal_equal(q1, p, o));
    IdealPresentation r = load("i3.ideal");
    CHECK_FALSE(ideal_equal(p, r, o));
    CHECK_FALSE(ideal_equal(r, p, o));
}

TEST_CASE("normal form is reduction-strategy independent") {
    std::vector<IdealPresentation> ideals = {load("i2.ideal"), load("i3.ideal"),
                                             load("i4.ideal", 5ul)};
    std::mt19937_64 rng(20240815);
    std::uniform_int_distribution<unsigned long> e(0, 14);
    for (const auto& p : ideals) {
        ReducedGroebnerBasis gb = buchberger(p, TermOrder::degrevlex(2));
        for (int i = 0; i < 333; ++i) {
            ExponentVector u = ev({e(rng), e(rng)});
            auto base = normal_form(u, gb);
            for (unsigned long seed = 1; seed <= 3; ++seed) {
                RandomPick strat(seed * 977 + i);
                auto alt = normal_form(u, gb, strat);
                REQUIRE(base.has_value() == alt.has_value());
                if (base) {
                    CHECK(base->expo == alt->expo);
                    CHECK(base->coeff == alt->coeff);
                }
            }
        }
    }
}

TEST_CASE("reduce_element and full reduction") {
    IdealPresentation p = load("i3.ideal");
    ReducedGroebnerBasis gb = buchberger(p, TermOrder::degrevlex(2));
    CHECK(reduce_element(el("x^6*y - x^8", p), gb).is_zero());
    BinomialElement r = reduce_element(el("x^6*y - 2*x^8", p), gb);
    CHECK_FALSE(r.is_zero());
    // the reduced form of a non-member has no reducible monomial
    if (r.is_binomial()) {
        auto l = normal_form(r.lead(), gb);
        REQUIRE(l);
        CHECK(l->expo == r.lead());
    }
}

TEST_CASE("degree-truncated basis answers low-degree membership") {
    // standard-homogeneous input so truncation is sound
    IdealPresentation p =
        parse_ideal("field Q\nvars x y z\nx*y - z^2\nx^2 - y*z\ny^2 - x*z\n");
    TermOrder o = TermOrder::degrevlex(3);
    ReducedGroebnerBasis full = buchberger(p, o);
    BuchbergerOptions opts;
    opts.degree_cap = Natural(3);
    ReducedGroebnerBasis capped = buchberger(p, o, opts);
    REQUIRE(capped.truncated_at.has_value());
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<unsigned long> e(0, 3);
    for (int i = 0; i < 200; ++i) {
        ExponentVector u = ev({e(rng), e(rng), e(rng)});
        if (u.total_degree() > 3) continue;
        auto a = normal_form(u, full);
        auto b = normal_form(u, capped);
        REQUIRE(a.has_value() == b.has_value());
        if (a) CHECK(a->expo == b->expo);
    }
}

TEST_CASE("monomial membership bucketing matches pairwise same-fiber checks") {
    IdealPresentation p = load("i3.ideal");
    ReducedGroebnerBasis gb = buchberger(p, TermOrder::degrevlex(2));
    // all monomials of total degree <= 9, bucketed by normal form
    std::map<std::pair<std::vector<Natural>, std::string>, std::vector<ExponentVector>> buckets;
    for (unsigned long a = 0; a <= 9; ++a)
        for (unsigned long b = 0; a + b <= 9; ++b) {
            ExponentVector u = ev({a, b});
            auto nf = normal_form(u, gb);
            REQUIRE(nf.has_value());  // pure ideal contains no monomials
            buckets[{nf->expo.coords(), nf->coeff.str()}].push_back(u);
        }
    // the known finite fibers appear as buckets
    auto find_bucket = [&](const ExponentVector& u) {
        auto nf = normal_form(u, gb);
        REQUIRE(nf.has_value());
        return buckets.at({nf->expo.coords(), nf->coeff.str()});
    };
    CHECK(find_bucket(ev({3, 3})).size() == 3);  // {x3y3, x2y5, x5y2}
    CHECK(find_bucket(ev({6, 1})).size() == 2);  // {x6y, x8}
    CHECK(find_bucket(ev({1, 6})).size() == 2);  // {xy6, y8}
    CHECK(find_bucket(ev({2, 2})).size() == 1);  // singleton
}
