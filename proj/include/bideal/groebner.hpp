#pragma once

#include <optional>
#include <vector>

#include "bideal/core.hpp"

namespace bideal {

// Reduced Groebner basis of a binomial ideal. Elements are canonical, monic,
// pairwise lead-irreducible, tails fully reduced, sorted by increasing lead
// under `order`. Unique for a given (ideal, order), independent of generator
// presentation.
struct ReducedGroebnerBasis {
    TermOrder order;
    unsigned long characteristic = 0;
    std::vector<std::string> vars;
    std::vector<BinomialElement> elements;
    // Set when computed degree-truncated: normal forms are only valid for
    // inputs of order-degree <= *truncated_at (homogeneous ideals only).
    std::optional<Natural> truncated_at;
};

// Test hook: chooses among the applicable reducers at each rewrite step.
// Confluence of reduction modulo a Groebner basis means the result cannot
// depend on the choice; randomized strategies exercise exactly that.
struct ReduceStrategy {
    virtual ~ReduceStrategy() = default;
    // candidates >= 1; returns an index in [0, candidates).
    virtual std::size_t pick(std::size_t candidates) const = 0;
};

struct BuchbergerOptions {
    // Skip S-pairs whose lcm exceeds this order-degree. Only sound for
    // presentations homogeneous with respect to the order's degree; callers
    // are responsible (minimize uses it for standard-graded input only).
    std::optional<Natural> degree_cap;
};

// Buchberger's algorithm specialized to two-term elements (every S-polynomial
// and every reduction step stays within two terms), normal selection
// strategy, followed by autoreduction to the unique reduced basis.
ReducedGroebnerBasis buchberger(const IdealPresentation& p, const TermOrder& order,
                                const BuchbergerOptions& opts = {});

// Normal form of the single monomial x^e: either Zero (nullopt) or a scalar
// multiple of a standard monomial.
std::optional<Term> normal_form(const ExponentVector& e,
                                const ReducedGroebnerBasis& gb);
std::optional<Term> normal_form(const ExponentVector& e,
                                const ReducedGroebnerBasis& gb,
                                const ReduceStrategy& strategy);

// Ideal membership of a (at most two-term) element.
bool member(const BinomialElement& b, const ReducedGroebnerBasis& gb);

// Equality of the ideals generated by two presentations over the same field
// and variables.
bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b,
                 const TermOrder& order);

// The least monomial element of the reduced basis, if any. Nonempty exactly
// when the ideal contains a monomial.
std::optional<ExponentVector> contains_monomial(const ReducedGroebnerBasis& gb);

// Full reduction of an element modulo the basis (used by membership and the
// autoreduction tests).
BinomialElement reduce_element(const BinomialElement& e,
                               const ReducedGroebnerBasis& gb);

// Normal forms of a batch of monomials; the parallel policy distributes over
// the batch. Declared here, implemented with the other kernels.
std::vector<std::optional<Term>> batch_normal_forms(
    const std::vector<ExponentVector>& monomials, const ReducedGroebnerBasis& gb,
    ExecutionPolicy policy = default_policy());

}  // namespace bideal
