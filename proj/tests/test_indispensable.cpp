#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "bideal/graver.hpp"
#include "bideal/indispensable.hpp"
#include "bideal/io.hpp"
#include "test_util.hpp"

using namespace bideal;
using testutil::el;
using testutil::ev;
using testutil::load;

TEST_CASE("indispensable monomials of the incomparable example") {
    IdealPresentation p = load("i3.ideal");
    std::vector<ExponentVector> expected = {ev({3, 3}), ev({1, 6}), ev({2, 5}),
                                            ev({5, 2}), ev({6, 1}), ev({0, 8}),
                                            ev({8, 0})};
    CHECK(indispensable_monomials(p) == expected);
    CHECK(indispensable_monomials(p, ExecutionPolicy::Serial) == expected);
    CHECK(support_monomials(p) == expected);  // supports form an antichain here
}

TEST_CASE("indispensable binomials of the incomparable example") {
    IdealPresentation p = load("i3.ideal");
    IndispensabilityReport r = indispensability_report(p);
    REQUIRE(r.verdicts.size() == 4);
    CHECK(r.verdicts[0] == GeneratorVerdict::Indispensable);   // y^8 - x y^6
    CHECK(r.verdicts[1] == GeneratorVerdict::NotAComponent);   // x^2y^5 - x^3y^3
    CHECK(r.verdicts[2] == GeneratorVerdict::NotAComponent);   // x^3y^3 - x^5y^2
    CHECK(r.verdicts[3] == GeneratorVerdict::Indispensable);   // x^6y - x^8
    std::vector<BinomialElement> expected = {el("y^8 - x*y^6", p),
                                             el("x^6*y - x^8", p)};
    std::sort(expected.begin(), expected.end(), element_less);
    CHECK(r.indispensable_binomials == expected);
    CHECK(indispensable_binomials(p) == expected);
    // the support graph has three components
    CHECK(r.graph.vertices.size() == 7);
    CHECK(r.graph.edges.size() == 4);
    CHECK(r.graph.components.size() == 3);
}

TEST_CASE("a parallel generator demotes both copies") {
    IdealPresentation p = load("ex34.ideal");
    IndispensabilityReport r = indispensability_report(p);
    REQUIRE(r.verdicts.size() == 5);
    CHECK(r.verdicts[0] == GeneratorVerdict::Indispensable);
    CHECK(r.verdicts[1] == GeneratorVerdict::NotAComponent);
    CHECK(r.verdicts[2] == GeneratorVerdict::NotAComponent);
    CHECK(r.verdicts[3] == GeneratorVerdict::MultiEdge);  // x^6y - x^8
    CHECK(r.verdicts[4] == GeneratorVerdict::MultiEdge);  // x^6y - 2x^8
    std::vector<BinomialElement> expected = {el("y^8 - x*y^6", p)};
    CHECK(r.indispensable_binomials == expected);
    // the indispensable monomials are unchanged by the extra generator
    CHECK(indispensable_monomials(p) == indispensable_monomials(load("i3.ideal")));
}

TEST_CASE("non-minimal supports are rejected") {
    IdealPresentation p = load("i1.ideal");  // (x^2 - x^5)
    IndispensabilityReport r = indispensability_report(p);
    CHECK(r.indispensable_monomials == std::vector<ExponentVector>{ev({2})});
    CHECK(r.verdicts[0] == GeneratorVerdict::SupportNotMinimal);
    CHECK(r.indispensable_binomials.empty());
}

TEST_CASE("coefficient ideal has one indispensable monomial and no binomials") {
    IdealPresentation p = load("i2.ideal");
    IndispensabilityReport r = indispensability_report(p);
    CHECK(r.indispensable_monomials == std::vector<ExponentVector>{ev({0, 1})});
    CHECK(r.indispensable_binomials.empty());
    for (GeneratorVerdict v : r.verdicts)
        CHECK(v == GeneratorVerdict::SupportNotMinimal);
}

TEST_CASE("minimize keeps irredundant sets intact") {
    TermOrder o = TermOrder::degrevlex(2);
    IdealPresentation p = load("i2.ideal");
    std::vector<BinomialElement> kept = minimize_generating_set(p, o);
    CHECK(kept.size() == 4);  // minimally generated by the four binomials

    IdealPresentation q =
        parse_ideal("field Q\nvars x y\ny - x^2*y\ny^3 - x*y^3\ny^4 - y^5\n");
    CHECK(minimize_generating_set(q, o).size() == 3);

    // a redundant generator is dropped and the ideal survives
    IdealPresentation r = parse_ideal(
        "field Q\nvars x y\ny - x^2*y\ny^3 - x*y^3\ny^4 - y^5\ny^5 - y^6\n");
    std::vector<BinomialElement> rk = minimize_generating_set(r, o);
    CHECK(rk.size() == 3);
    IdealPresentation rmin = make_presentation(0, r.vars, rk);
    CHECK(ideal_equal(rmin, q, o));

    // idempotence
    IdealPresentation again = make_presentation(0, p.vars, kept);
    CHECK(minimize_generating_set(again, o) == kept);
}

TEST_CASE("generation by indispensables") {
    TermOrder o2 = TermOrder::degrevlex(2);
    IndispensableGenerationReport r2 = is_generated_by_indispensables(load("i2.ideal"), o2);
    CHECK_FALSE(r2.verdict);
    CHECK(r2.s == 4);
    CHECK(r2.gmi == 1);
    CHECK(r2.indispensable.empty());

    IndispensableGenerationReport r3 = is_generated_by_indispensables(load("i3.ideal"), o2);
    CHECK_FALSE(r3.verdict);
    CHECK(r3.s == 4);
    CHECK(r3.gmi == 7);

    IdealPresentation simple = parse_ideal("field Q\nvars x y z\nx*z - y^2\n");
    IndispensableGenerationReport rs =
        is_generated_by_indispensables(simple, TermOrder::degrevlex(3));
    CHECK(rs.verdict);
    CHECK(rs.s == 1);
    CHECK(rs.gmi == 2);
    REQUIRE(rs.indispensable.size() == 1);
    CHECK(rs.indispensable[0] == el("x*z - y^2", simple));
}

namespace {

// Random ideal-preserving rewrites of a binomial generating set: cancel the
// trail of one generator against a divisible term of another, permute,
// duplicate. The ideal is unchanged, so the indispensability data must be too.
std::vector<BinomialElement> regenerate(const IdealPresentation& p,
                                        std::mt19937_64& rng, int ops) {
    std::vector<BinomialElement> gens = p.generators;
    TermOrder ambient = TermOrder::degrevlex(p.arity());
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int k = 0; k < ops; ++k) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j || !gens[i].is_binomial() || !gens[j].is_binomial()) continue;
        const BinomialElement &gi = gens[i], &gj = gens[j];
        // gi = x^Li + ci x^Ti, gj = x^Lj + cj x^Tj
        for (int which = 0; which < 2; ++which) {
            const ExponentVector& hook = which == 0 ? gj.lead() : gj.trail();
            if (!divides(hook, gi.trail())) continue;
            ExponentVector s = difference(gi.trail(), hook);
            // subtract (ci / coeff(hook)) x^s gj: the trail cancels, leaving
            // the other term of gj shifted by s
            Scalar factor = which == 0 ? gi.trail_coeff()
                                       : gi.trail_coeff() / gj.trail_coeff();
            const ExponentVector& other = which == 0 ? gj.trail() : gj.lead();
            Scalar c2 = Scalar::zero(p.characteristic) -
                        (which == 0 ? factor * gj.trail_coeff() : factor);
            BinomialElement cand = normalize(Scalar::one(p.characteristic), gi.lead(),
                                             c2, sum(other, s), ambient);
            if (cand.is_binomial()) {
                gens[i] = cand;
                break;
            }
        }
    }
    std::shuffle(gens.begin(), gens.end(), rng);
    gens.push_back(gens[rng() % gens.size()]);  // duplicate one; dedup collapses it
    return gens;
}

}  // namespace

TEST_CASE("indispensability is invariant under regeneration") {
    std::mt19937_64 rng(424242);
    for (const char* name : {"i2.ideal", "i3.ideal"}) {
        IdealPresentation p = load(name);
        std::vector<ExponentVector> mono = indispensable_monomials(p);
        std::vector<BinomialElement> bino = indispensable_binomials(p);
        for (int round = 0; round < 50; ++round) {
            IdealPresentation q =
                make_presentation(p.characteristic, p.vars, regenerate(p, rng, 6));
            CAPTURE(name);
            CAPTURE(round);
            CHECK(indispensable_monomials(q) == mono);
            CHECK(indispensable_binomials(q) == bino);
        }
    }
}

TEST_CASE("indispensables survive passing to subideals") {
    // Generators of J drawn from the lifted Graver elements of i3: each is
    // indispensable in J because primitive elements have pairwise
    // incomparable support pairs.
    IdealPresentation p = load("i3.ideal");
    GraverResult gr = graver_basis(p);
    IdealPresentation lifted = lawrence_lift(gr.elements, p);
    REQUIRE(lifted.generators.size() == gr.elements.size());
    std::mt19937_64 rng(7);
    for (int round = 0; round < 20; ++round) {
        std::vector<BinomialElement> subset;
        for (const auto& g : lifted.generators)
            if (rng() % 3 != 0) subset.push_back(g);
        if (subset.empty()) subset.push_back(lifted.generators[0]);
        IdealPresentation j = make_presentation(0, lifted.vars, subset);
        std::vector<BinomialElement> expected = j.generators;
        std::sort(expected.begin(), expected.end(), element_less);
        CHECK(indispensable_binomials(j) == expected);
    }
}
