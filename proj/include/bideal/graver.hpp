#pragma once

// Graver bases of pure binomial ideals.
//
// An element x^u - x^v of a pure ideal I is primitive when no other nonzero
// x^u' - x^v' in I has x^u' | x^u and x^v' | x^v.  The Graver basis Gr(I) is
// the set of all primitive elements.  It is enumerated here by a capped
// degree-level sweep; when I is a lattice ideal (admits a strictly positive
// grading and equals its own saturation), the result is certified exact by
// an independent route through the lifted lattice {(m, -m)}.

#include <cstddef>
#include <optional>
#include <vector>

#include "core.hpp"
#include "groebner.hpp"

namespace bideal {

struct GraverResult {
    std::vector<BinomialElement> elements;  // canonical, sorted by element_less
    Natural degree_cap;                     // level sweep ran through this total degree
    std::size_t window;                     // requested trailing-quiet-level count
    std::size_t observed_window;            // trailing levels that produced nothing
    bool exact;  // certified complete via the lifted-lattice route
};

// Primitivity test against a reduced basis of the ambient ideal.  Requires b
// to be a pure binomial that is a member of the ideal; throws usage_error
// otherwise, or when the divisor box of b is too large to scan.
bool is_primitive(const BinomialElement& b, const ReducedGroebnerBasis& gb);

// Capped Graver enumeration.  `degree_cap` defaults to
// 2 * (max generator degree) + 4.  Throws usage_error unless the presentation
// is pure and the cap is at least the max generator degree.
GraverResult graver_basis(const IdealPresentation& p,
                          std::optional<Natural> degree_cap = std::nullopt,
                          std::size_t window = 4,
                          ExecutionPolicy policy = default_policy());

// Lawrence lifting: each x^u - x^v among `elements` becomes
// x^u y^v - x^v y^u in 2n variables, where y_i is base.vars[i] + "'".
IdealPresentation lawrence_lift(const std::vector<BinomialElement>& elements,
                                const IdealPresentation& base);

struct UgbOrderBasis {
    TermOrder order;
    std::vector<BinomialElement> elements;  // canonical under that order
};

struct UgbSample {
    std::vector<UgbOrderBasis> bases;
    // Union of all bases, re-normalized under the ambient degrevlex order so
    // the same polynomial appears once regardless of which order found it.
    std::vector<BinomialElement> union_elements;
    bool all_equal;  // every sampled reduced basis is the same set
};

// Reduced bases under a sample of term orders (defaults to sample_orders).
UgbSample universal_gb_sample(const IdealPresentation& p,
                              std::vector<TermOrder> orders = {});

// lex, deglex and degrevlex under each cyclic rotation of the variables:
// 3 * arity orders in total.
std::vector<TermOrder> sample_orders(std::size_t arity);

}  // namespace bideal
