#pragma once

#include <vector>

#include "bideal/core.hpp"
#include "bideal/groebner.hpp"

namespace bideal {

// All support monomials of the generators (lead and trail exponents),
// deduplicated, sorted by (degree, lex).
std::vector<ExponentVector> support_monomials(const IdealPresentation& p);

// Indispensable monomials = minimal generators of the monomial ideal spanned
// by all fibers containing monomials of I, computed as the divisibility-
// minimal elements of the generator supports. Exact, no Groebner basis.
std::vector<ExponentVector> indispensable_monomials(
    const IdealPresentation& p, ExecutionPolicy policy = default_policy());

// Support multigraph: one vertex per distinct support monomial, one edge per
// binomial generator (monomial generators contribute a vertex only).
// Parallel edges between the same pair of vertices are kept apart.
struct SupportGraph {
    struct Edge {
        std::size_t a, b;         // vertex indices, a < b
        std::size_t generator;    // index into the presentation
    };
    std::vector<ExponentVector> vertices;  // (degree, lex) sorted
    std::vector<Edge> edges;
    std::vector<std::size_t> component_of;             // per vertex
    std::vector<std::vector<std::size_t>> components;  // vertex indices
};
SupportGraph support_graph(const IdealPresentation& p);

// Why a generator is or is not an indispensable binomial.
enum class GeneratorVerdict {
    Indispensable,      // own simple-edge component, both endpoints minimal
    SupportNotMinimal,  // an endpoint is not an indispensable monomial
    MultiEdge,          // a parallel generator shares the same support pair
    NotAComponent,      // its support does not form its own single-edge component
};

struct IndispensabilityReport {
    std::vector<ExponentVector> indispensable_monomials;
    std::vector<BinomialElement> indispensable_binomials;  // element_less sorted
    std::vector<GeneratorVerdict> verdicts;                // per generator
    SupportGraph graph;
};

// Graph-based classification of every generator; Groebner-free. Valid for
// any binomial generating set: an indispensable binomial appears in every
// one, and the support-graph test recognizes exactly those occurrences.
IndispensabilityReport indispensability_report(const IdealPresentation& p);
std::vector<BinomialElement> indispensable_binomials(const IdealPresentation& p);

// Greedy irredundant subset: candidates are dropped, largest degree first
// (deterministic tie-breaks), whenever they lie in the ideal generated by the
// rest. The result generates the same ideal and contains every indispensable
// binomial.
std::vector<BinomialElement> minimize_generating_set(const IdealPresentation& p,
                                                     const TermOrder& order);

// Is the ideal generated by its indispensable binomials? Tested by the
// count criterion |G(M_I)| == 2s on an irredundant set of size s, and
// cross-checked by computing the indispensable binomials directly and testing
// ideal equality.
struct IndispensableGenerationReport {
    bool verdict;
    std::size_t s;    // size of the irredundant generating set
    std::size_t gmi;  // number of indispensable monomials
    std::vector<BinomialElement> minimized;
    std::vector<BinomialElement> indispensable;
};
IndispensableGenerationReport is_generated_by_indispensables(
    const IdealPresentation& p, const TermOrder& order);

}  // namespace bideal
