#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bideal/errors.hpp"

namespace bideal {

using Natural = mpz_class;   // non-negative in exponent positions
using Integer = mpz_class;   // signed lattice entries
using IntVector = std::vector<Integer>;

// ---------------------------------------------------------------------------
// Scalar: element of Q (characteristic 0) or GF(p) (p prime, fits in 62 bits).

class Scalar {
public:
    Scalar() = default;  // zero of Q

    static Scalar zero(unsigned long characteristic);
    static Scalar one(unsigned long characteristic);
    static Scalar from_integer(unsigned long characteristic, const Integer& z);
    // Embeds num/den; throws usage_error if den vanishes mod p.
    static Scalar from_rational(unsigned long characteristic, const mpq_class& q);

    unsigned long characteristic() const { return p_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // usage_error on zero divisor
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Value accessors; each is only meaningful in its own characteristic.
    const mpq_class& rational() const;
    unsigned long residue() const;

    // "3", "-3/4", residues as "2".
    std::string str() const;

private:
    unsigned long p_ = 0;
    mpq_class rat_;           // used when p_ == 0
    unsigned long res_ = 0;   // used when p_ > 0

    void check_same_field(const Scalar& o) const;
};

bool is_prime(unsigned long p);

// ---------------------------------------------------------------------------
// ExponentVector: fixed-arity vector of arbitrary-precision naturals.

class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t arity) : c_(arity) {}
    explicit ExponentVector(std::vector<Natural> coords) : c_(std::move(coords)) {}

    // Convenience for tests and table-driven code.
    static ExponentVector of(const std::vector<unsigned long>& v);

    std::size_t arity() const { return c_.size(); }
    const Natural& operator[](std::size_t i) const { return c_[i]; }
    Natural& operator[](std::size_t i) { return c_[i]; }

    Natural total_degree() const;
    bool is_zero() const;

    bool operator==(const ExponentVector& o) const { return c_ == o.c_; }
    bool operator!=(const ExponentVector& o) const { return c_ != o.c_; }

    const std::vector<Natural>& coords() const { return c_; }

private:
    std::vector<Natural> c_;
};

// Componentwise a <= b. Arity mismatch is a usage error.
bool divides(const ExponentVector& a, const ExponentVector& b);

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
ExponentVector sum(const ExponentVector& a, const ExponentVector& b);
// a - b, requires divides(b, a).
ExponentVector difference(const ExponentVector& a, const ExponentVector& b);

// First-differing-coordinate comparison in variable order 0..n-1.
// Not a term order; used for deterministic tie-breaks and container keys.
int lex_compare(const ExponentVector& a, const ExponentVector& b);

// (total degree, lex) — the canonical enumeration order used for fiber
// members, result sets and BFS frontiers.
bool deg_lex_less(const ExponentVector& a, const ExponentVector& b);

struct DegLexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        return deg_lex_less(a, b);
    }
};

// Signed difference a - b as a lattice vector.
IntVector signed_difference(const ExponentVector& a, const ExponentVector& b);
bool is_zero(const IntVector& v);
// u+ and u-: the positive and negative parts of a lattice vector.
ExponentVector positive_part(const IntVector& v);
ExponentVector negative_part(const IntVector& v);

// ---------------------------------------------------------------------------
// Term orders: lex / deglex / degrevlex over a variable permutation, plus a
// weighted variant used internally by saturation.

class TermOrder {
public:
    enum class Kind { Lex, DegLex, DegRevLex };

    // perm lists variable indices from most to least significant and must be
    // a bijection on 0..n-1.
    TermOrder(Kind kind, std::vector<std::size_t> perm);

    static TermOrder lex(std::size_t arity);
    static TermOrder deglex(std::size_t arity);
    static TermOrder degrevlex(std::size_t arity);
    // Degree taken with the given positive weights, ties broken reverse
    // lexicographically with `last` as the least significant variable.
    static TermOrder weighted_revlex(std::vector<Natural> weights, std::size_t last);

    Kind kind() const { return kind_; }
    std::size_t arity() const { return perm_.size(); }
    const std::vector<std::size_t>& permutation() const { return perm_; }
    bool is_weighted() const { return !weights_.empty(); }
    const std::vector<Natural>& weights() const { return weights_; }

    // Degree functional this order refines: weighted when weighted, total
    // degree for DegLex/DegRevLex, still total degree for Lex (callers use it
    // for caps, never for comparisons).
    Natural degree(const ExponentVector& e) const;

    int compare(const ExponentVector& a, const ExponentVector& b) const;
    bool less(const ExponentVector& a, const ExponentVector& b) const {
        return compare(a, b) < 0;
    }
    bool greater(const ExponentVector& a, const ExponentVector& b) const {
        return compare(a, b) > 0;
    }

    bool operator==(const TermOrder& o) const;

    std::string describe() const;  // "degrevlex(x0 x1)" style, for messages

private:
    Kind kind_;
    std::vector<std::size_t> perm_;
    std::vector<Natural> weights_;
};

// ---------------------------------------------------------------------------
// Terms and (at most two-term) elements in canonical form.

struct Term {
    Scalar coeff;
    ExponentVector expo;
};

// Canonical monic form of c1*x^u + c2*x^v. Kinds:
//   Zero      — nothing survived cancellation
//   Monomial  — single term, coefficient normalized to 1
//   Binomial  — lead monic, lead > trail in the given order, trail coefficient
//               stored as the actual summand (element = x^lead + tc * x^trail,
//               tc != 0). Pure means tc == -1, i.e. x^u - x^v.
class BinomialElement {
public:
    enum class Kind { Zero, Monomial, Binomial };

    static BinomialElement zero(std::size_t arity);
    static BinomialElement monomial(ExponentVector e);
    // Used by normalize/arithmetic; lead coefficient must already be one.
    static BinomialElement binomial(ExponentVector lead, Scalar trail_coeff,
                                    ExponentVector trail);

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::Zero; }
    bool is_monomial() const { return kind_ == Kind::Monomial; }
    bool is_binomial() const { return kind_ == Kind::Binomial; }

    std::size_t arity() const { return arity_; }

    // Lead exponent; usage_error on Zero.
    const ExponentVector& lead() const;
    // Trail term (actual summand coefficient); usage_error unless Binomial.
    const ExponentVector& trail() const;
    const Scalar& trail_coeff() const;
    // lambda in the x^u - lambda*x^v reading: -trail_coeff.
    Scalar lambda() const;

    bool is_pure() const;  // Binomial with trail coefficient -1

    // lead - trail as a signed vector; usage_error unless Binomial.
    IntVector move() const;

    // Max total degree over the support; Zero has degree 0 by convention.
    Natural degree() const;

    bool operator==(const BinomialElement& o) const;
    bool operator!=(const BinomialElement& o) const { return !(*this == o); }

private:
    Kind kind_ = Kind::Zero;
    std::size_t arity_ = 0;
    ExponentVector lead_;
    Scalar tc_;
    ExponentVector trail_;
};

// Canonical form of the raw combination c1*x^u + c2*x^v under `order`.
// Scalars may be zero; like terms merge; the result is monic.
BinomialElement normalize(const Scalar& c1, const ExponentVector& u,
                          const Scalar& c2, const ExponentVector& v,
                          const TermOrder& order);

// Deterministic comparison for result sets: (degree, lead, trail) by deg-lex.
bool element_less(const BinomialElement& a, const BinomialElement& b);

// ---------------------------------------------------------------------------
// Ideal presentations.

struct IdealPresentation {
    unsigned long characteristic = 0;
    std::vector<std::string> vars;
    std::vector<BinomialElement> generators;  // canonical, no zeros

    std::size_t arity() const { return vars.size(); }
    bool is_pure() const;  // every generator a pure binomial
};

// Validates (prime characteristic, matching arities, no zero generators after
// canonicalization) and collapses exact duplicates, preserving first
// occurrence order. Raw elements are re-normalized under the ambient
// degrevlex order so storage is canonical.
IdealPresentation make_presentation(unsigned long characteristic,
                                    std::vector<std::string> vars,
                                    const std::vector<BinomialElement>& gens);

// Moves of the binomial generators (monomial generators contribute none).
std::vector<IntVector> generator_moves(const IdealPresentation& p);

// True when every generator is homogeneous for the all-ones grading.
bool standard_homogeneous(const IdealPresentation& p);

// Default variable names x1..xn.
std::vector<std::string> default_var_names(std::size_t n);

// ---------------------------------------------------------------------------
// Execution policy for the data-parallel kernels. Serial is the reference
// implementation; Parallel uses OpenMP when compiled in. Results are
// identical by construction.

enum class ExecutionPolicy { Serial, Parallel };
ExecutionPolicy default_policy();

// Minimal elements of a set of monomials under divisibility (Dickson
// minimalization). Input may contain duplicates; output is sorted by
// (degree, lex) and duplicate-free.
std::vector<ExponentVector> minimal_monomials(std::vector<ExponentVector> monomials,
                                              ExecutionPolicy policy = default_policy());

}  // namespace bideal
