#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bideal/core.hpp"
#include "bideal/groebner.hpp"

namespace bideal {

// Three-valued answers for capped comparisons. No means definitely not;
// Unknown means an exploration cap prevented a decision.
enum class Tri { Yes, No, Unknown };

struct ExplorationCaps {
    Natural degree_cap;        // members above this total degree are pruned
    std::size_t node_cap = 100000;  // maximum number of members retained
};

// degree cap = 4 * (largest total degree among the generators' terms and u),
// at least 4; node cap 10^5.
ExplorationCaps default_caps(const IdealPresentation& p, const ExponentVector& u);

// x^u - lambda x^v in I for some lambda? lambda is unique unless the fiber is
// the monomial fiber, in which case every lambda works and 1 is reported.
struct SameFiber {
    Scalar lambda;
    bool monomial_fiber;
};
std::optional<SameFiber> same_fiber(const ExponentVector& u, const ExponentVector& v,
                                    const ReducedGroebnerBasis& gb);

// Breadth-first closure of x^u under the generator moves, smallest
// (degree, lex) member first. Each member m carries the witness scalar c with
// x^u - c x^m in I. Two distinct scalars meeting at one monomial certify that
// the fiber is the monomial fiber (x^m itself lies in I); this is
// double-checked against the Groebner basis.
struct FiberView {
    ExponentVector representative;
    std::map<ExponentVector, Scalar, DegLexLess> members;
    bool complete = false;           // closure exhausted, no cap hit
    bool is_monomial_fiber = false;  // F(I); infinite, so never complete
    ExplorationCaps caps;
    std::vector<IntVector> moves;    // signed move vectors actually applied
};
FiberView explore_fiber(const ExponentVector& u, const IdealPresentation& p,
                        const ReducedGroebnerBasis& gb, const ExplorationCaps& caps);

// The monomial fiber F(I) = monomials contained in I, presented by the
// monomial elements of the reduced basis. Empty optional when F(I) is empty.
struct MonomialFiber {
    std::vector<ExponentVector> witness_monomials;  // monomial basis elements
};
std::optional<MonomialFiber> monomial_fiber(const ReducedGroebnerBasis& gb);
bool monomial_fiber_contains(const ReducedGroebnerBasis& gb, const ExponentVector& w);

// Fiber order: Fbar_a <= Fbar_b iff x^w F_a is a subset of F_b for some w,
// equivalently x^a divides some member of F_b. Capped exploration makes this
// a semi-decision: Yes is witnessed, No requires a complete fiber.
Tri fiber_leq(const ExponentVector& a, const ExponentVector& b,
              const IdealPresentation& p, const ReducedGroebnerBasis& gb,
              const ExplorationCaps& caps);
Tri fiber_equiv(const ExponentVector& a, const ExponentVector& b,
                const IdealPresentation& p, const ReducedGroebnerBasis& gb,
                const ExplorationCaps& caps);

// Fibers of the generators, deduplicated, with the (capped) order relation,
// grouped into equivalence classes (mutual <=).
struct FiberClassPoset {
    std::vector<ExponentVector> reps;                   // distinct fibers
    std::vector<std::vector<std::size_t>> rep_generators;  // generator indices
    std::vector<std::vector<Tri>> leq;  // reflexive, Yes transitively closed
    std::vector<std::vector<std::size_t>> classes;      // partition of reps
    std::vector<std::pair<std::size_t, std::size_t>> unknown_pairs;

    Tri class_leq(std::size_t a, std::size_t b) const;
    // Every pair of classes comparable (no Unknowns in the way).
    bool totally_ordered() const;
};
FiberClassPoset markov_fiber_classes(const IdealPresentation& p,
                                     const ReducedGroebnerBasis& gb,
                                     const ExplorationCaps& caps);

// Gamma graph of a completely explored fiber F: vertices are the members,
// edges join u, v whenever x^u - lambda x^v lies in the subideal generated by
// the generators whose fibers sit strictly below Fbar. Throws
// inconclusive_error when a needed comparison is Unknown at the caps, and
// usage_error when F is not complete.
struct GammaGraph {
    ExponentVector representative;
    std::vector<ExponentVector> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // index pairs, i < j
    IdealPresentation below;  // generating set found for the strictly-below subideal
};
GammaGraph gamma_graph(const FiberView& fiber, const IdealPresentation& p,
                       const ReducedGroebnerBasis& gb, const ExplorationCaps& caps);

// Indispensability of the monomial x^u by the three fiber conditions:
//   (a) the fiber of u has at least two elements,
//   (b) x^u is isolated in the gamma graph of its fiber,
//   (c) no proper divisor of x^u lies in a fiber equivalent to F_u.
// Each condition is evaluated to Yes/No/Unknown against the caps; the verdict
// is conclusive as soon as the conditions force it. A conclusive verdict is
// cross-checked against the support-minimalization route; disagreement is an
// internal error.
struct IndispensableMonomialCheck {
    Tri verdict;
    Tri cond_two_members;
    Tri cond_isolated;
    Tri cond_divisors;
    bool support_route;  // exact answer via minimal monomials of the supports
    std::vector<std::size_t> unresolved_generators;  // fiber comparisons at cap
};
IndispensableMonomialCheck check_indispensable_monomial(
    const ExponentVector& u, const IdealPresentation& p,
    const ReducedGroebnerBasis& gb, const ExplorationCaps& caps);

}  // namespace bideal
