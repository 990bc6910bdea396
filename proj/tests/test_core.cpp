#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "bideal/core.hpp"
#include "bideal/errors.hpp"
#include "bideal/kernels.hpp"
#include "test_util.hpp"

using namespace bideal;
using testutil::ev;

TEST_CASE("rational scalar arithmetic") {
    Scalar a = Scalar::from_rational(0, mpq_class(3, 4));
    Scalar b = Scalar::from_integer(0, -2);
    CHECK((a * b).str() == "-3/2");
    CHECK((a + b).str() == "-5/4");
    CHECK((a - b).str() == "11/4");
    CHECK((a / b).str() == "-3/8");
    CHECK((-b).str() == "2");
    CHECK(b.inverse().str() == "-1/2");
    CHECK(Scalar::one(0).is_one());
    CHECK(Scalar::zero(0).is_zero());
    CHECK_THROWS_AS(a / Scalar::zero(0), usage_error);
}

TEST_CASE("prime field scalar arithmetic") {
    Scalar a = Scalar::from_integer(7, 10);  // 3 mod 7
    Scalar b = Scalar::from_integer(7, -1);  // 6 mod 7
    CHECK(a.residue() == 3);
    CHECK(b.residue() == 6);
    CHECK((a * b).residue() == 4);
    CHECK((a + b).residue() == 2);
    CHECK((a / b).residue() == 3 * 6 % 7);  // inverse of 6 is 6
    CHECK(a.inverse().residue() == 5);      // 3*5 = 15 = 1 mod 7
    CHECK(Scalar::from_rational(7, mpq_class(1, 3)).residue() == 5);
    CHECK_THROWS_AS(Scalar::from_rational(7, mpq_class(1, 7)), usage_error);
    CHECK_THROWS_AS(a + Scalar::one(0), usage_error);  // field mismatch
}

TEST_CASE("primality guard") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(1000003));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(1000001));  // 101 * 9901
}

TEST_CASE("exponent vector operations") {
    ExponentVector a = ev({2, 0, 3});
    ExponentVector b = ev({2, 1, 5});
    CHECK(divides(a, b));
    CHECK_FALSE(divides(b, a));
    CHECK(lcm(a, b) == ev({2, 1, 5}));
    CHECK(sum(a, b) == ev({4, 1, 8}));
    CHECK(difference(b, a) == ev({0, 1, 2}));
    CHECK_THROWS_AS(difference(a, b), usage_error);
    CHECK(a.total_degree() == 5);
    CHECK(deg_lex_less(a, b));          // degree 5 < 6
    CHECK(deg_lex_less(ev({1, 2}), ev({2, 1})));  // same degree, first coord
    CHECK_THROWS_AS(divides(a, ev({1, 1})), usage_error);
}

TEST_CASE("signed moves and parts") {
    IntVector m = signed_difference(ev({3, 0}), ev({1, 4}));
    CHECK(m == IntVector{2, -4});
    CHECK(positive_part(m) == ev({2, 0}));
    CHECK(negative_part(m) == ev({0, 4}));
    CHECK_FALSE(is_zero(m));
    CHECK(is_zero(signed_difference(ev({1, 1}), ev({1, 1}))));
}

TEST_CASE("lex, deglex and degrevlex comparisons") {
    TermOrder lex = TermOrder::lex(3);
    TermOrder dlex = TermOrder::deglex(3);
    TermOrder drl = TermOrder::degrevlex(3);
    ExponentVector xz = ev({1, 0, 1});
    ExponentVector y2 = ev({0, 2, 0});
    CHECK(lex.greater(xz, y2));
    CHECK(dlex.greater(xz, y2));   // same degree, x wins
    CHECK(drl.less(xz, y2));       // xz has more of the last variable
    // degrevlex on two variables coincides with deglex
    TermOrder drl2 = TermOrder::degrevlex(2);
    CHECK(drl2.greater(ev({2, 1}), ev({1, 2})));
    CHECK(drl2.greater(ev({0, 3}), ev({2, 0})));  // degree first
    // permuted lex: y most significant
    TermOrder plex(TermOrder::Kind::Lex, {1, 0, 2});
    CHECK(plex.greater(y2, xz));
    CHECK_THROWS_AS(TermOrder(TermOrder::Kind::Lex, {0, 0, 1}), usage_error);
}

TEST_CASE("weighted revlex places its last variable least significant") {
    TermOrder w = TermOrder::weighted_revlex({Natural(1), Natural(1)}, 0);
    // equal weight, x0 last: x0^2 < x0*x1 < x1^2
    CHECK(w.less(ev({2, 0}), ev({1, 1})));
    CHECK(w.less(ev({1, 1}), ev({0, 2})));
    CHECK(w.is_weighted());
    TermOrder w2 = TermOrder::weighted_revlex({Natural(3), Natural(1)}, 1);
    CHECK(w2.degree(ev({1, 2})) == 5);
    CHECK(w2.greater(ev({1, 0}), ev({0, 2})));  // weight 3 beats weight 2
}

TEST_CASE("normalize produces canonical monic elements") {
    TermOrder o = TermOrder::degrevlex(2);
    Scalar one = Scalar::one(0);
    // 2x^2y - 4xy^2, lead x^2y under degrevlex, trail coefficient -2
    BinomialElement b = normalize(Scalar::from_integer(0, 2), ev({2, 1}),
                                  Scalar::from_integer(0, -4), ev({1, 2}), o);
    CHECK(b.is_binomial());
    CHECK(b.lead() == ev({2, 1}));
    CHECK(b.trail() == ev({1, 2}));
    CHECK(b.trail_coeff().str() == "-2");
    CHECK(b.lambda().str() == "2");
    CHECK_FALSE(b.is_pure());
    // like terms merge: 3x + 5x -> monomial
    BinomialElement m = normalize(Scalar::from_integer(0, 3), ev({1, 0}),
                                  Scalar::from_integer(0, 5), ev({1, 0}), o);
    CHECK(m.is_monomial());
    // full cancellation
    BinomialElement z = normalize(one, ev({1, 0}), -one, ev({1, 0}), o);
    CHECK(z.is_zero());
    // characteristic 3 drops the 9y^6 term
    BinomialElement c = normalize(Scalar::one(3), ev({0, 4}),
                                  Scalar::from_integer(3, -9), ev({0, 6}), o);
    CHECK(c.is_monomial());
    CHECK(c.lead() == ev({0, 4}));
    // pure binomial
    BinomialElement p = normalize(one, ev({0, 2}), -one, ev({2, 0}), o);
    CHECK(p.is_pure());
    CHECK(p.lambda().is_one());
}

TEST_CASE("presentation validation and canonicalization") {
    TermOrder o = TermOrder::degrevlex(2);
    Scalar one = Scalar::one(0);
    std::vector<BinomialElement> gens = {
        normalize(one, ev({0, 8}), -one, ev({1, 6}), o),
        normalize(one, ev({0, 8}), -one, ev({1, 6}), o),  // duplicate collapses
        normalize(one, ev({6, 1}), -one, ev({8, 0}), o),
    };
    IdealPresentation p = make_presentation(0, {"x", "y"}, gens);
    CHECK(p.generators.size() == 2);
    CHECK(p.is_pure());
    CHECK(generator_moves(p).size() == 2);
    CHECK_FALSE(standard_homogeneous(p));  // y^8 vs x*y^6 degrees differ

    CHECK_THROWS_AS(make_presentation(6, {"x", "y"}, gens), usage_error);   // 6 not prime
    CHECK_THROWS_AS(make_presentation(0, {"x", "x"}, gens), usage_error);   // dup names
    std::vector<BinomialElement> with_zero = {BinomialElement::zero(2)};
    CHECK_THROWS_AS(make_presentation(0, {"x", "y"}, with_zero), usage_error);

    std::vector<BinomialElement> homog = {normalize(one, ev({2, 0}), -one, ev({0, 2}), o)};
    CHECK(standard_homogeneous(make_presentation(0, {"x", "y"}, homog)));
}

TEST_CASE("element ordering is deterministic") {
    TermOrder o = TermOrder::degrevlex(2);
    Scalar one = Scalar::one(0);
    BinomialElement a = normalize(one, ev({2, 0}), -one, ev({0, 1}), o);
    BinomialElement b = normalize(one, ev({0, 3}), -one, ev({1, 0}), o);
    CHECK(element_less(a, b));  // degree 2 before degree 3
    CHECK_FALSE(element_less(b, a));
    CHECK_FALSE(element_less(a, a));
}

TEST_CASE("minimal monomials: known sets") {
    // supports of the two-variable desk example are already an antichain
    std::vector<ExponentVector> i3 = {ev({0, 8}), ev({1, 6}), ev({2, 5}), ev({3, 3}),
                                      ev({5, 2}), ev({6, 1}), ev({8, 0})};
    auto min3 = minimal_monomials(i3);
    CHECK(min3.size() == 7);
    // everything in i2's supports is a multiple of y
    std::vector<ExponentVector> i2 = {ev({0, 1}), ev({2, 1}), ev({0, 3}), ev({1, 3}),
                                      ev({0, 4}), ev({0, 6}), ev({0, 7}), ev({0, 8})};
    auto min2 = minimal_monomials(i2);
    REQUIRE(min2.size() == 1);
    CHECK(min2[0] == ev({0, 1}));
    // duplicates collapse
    auto dup = minimal_monomials({ev({1, 1}), ev({1, 1}), ev({2, 2})});
    CHECK(dup.size() == 1);
}

TEST_CASE("minimal monomials: Dickson properties on random input") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<unsigned long> e(0, 6);
    for (int round = 0; round < 20; ++round) {
        std::vector<ExponentVector> in;
        for (int i = 0; i < 120; ++i) in.push_back(ev({e(rng), e(rng), e(rng)}));
        auto out_s = minimal_monomials(in, ExecutionPolicy::Serial);
        auto out_p = minimal_monomials(in, ExecutionPolicy::Parallel);
        CHECK(out_s == out_p);
        // antichain
        for (std::size_t i = 0; i < out_s.size(); ++i)
            for (std::size_t j = 0; j < out_s.size(); ++j)
                if (i != j) CHECK_FALSE(divides(out_s[i], out_s[j]));
        // covering
        for (const auto& m : in) {
            bool covered = false;
            for (const auto& g : out_s) covered = covered || divides(g, m);
            CHECK(covered);
        }
        // sorted, duplicate free
        CHECK(std::is_sorted(out_s.begin(), out_s.end(), deg_lex_less));
        CHECK(std::adjacent_find(out_s.begin(), out_s.end()) == out_s.end());
    }
}

TEST_CASE("parallel_mark agrees with the serial reference") {
    std::vector<int> data(1000);
    for (int i = 0; i < 1000; ++i) data[i] = (i * 37) % 101;
    auto pred = [&](std::size_t i) { return data[i] % 3 == 0; };
    auto s = parallel_mark(data.size(), pred, ExecutionPolicy::Serial);
    auto p = parallel_mark(data.size(), pred, ExecutionPolicy::Parallel);
    CHECK(s == p);
    CHECK(s.size() == data.size());
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(static_cast<bool>(s[i]) == pred(i));
}
