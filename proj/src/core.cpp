#include "bideal/core.hpp"

#include <algorithm>
#include <set>

namespace bideal {

// ---------------------------------------------------------------------------
// Scalar

namespace {

void check_characteristic(unsigned long p) {
    if (p == 0) return;
    if (p >= (1ul << 62))
        throw usage_error("characteristic too large: " + std::to_string(p));
    if (!is_prime(p))
        throw usage_error("characteristic must be prime, got " + std::to_string(p));
}

unsigned long mod_inverse(unsigned long a, unsigned long p) {
    mpz_class inv, az(a), pz(p);
    if (mpz_invert(inv.get_mpz_t(), az.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw usage_error("division by zero in GF(" + std::to_string(p) + ")");
    return inv.get_ui();
}

unsigned long mod_mul(unsigned long a, unsigned long b, unsigned long p) {
    return static_cast<unsigned long>(
        (static_cast<unsigned __int128>(a) * b) % p);
}

}  // namespace

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    mpz_class z(p);
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

Scalar Scalar::zero(unsigned long characteristic) {
    check_characteristic(characteristic);
    Scalar s;
    s.p_ = characteristic;
    return s;
}

Scalar Scalar::one(unsigned long characteristic) {
    Scalar s = zero(characteristic);
    if (s.p_ == 0)
        s.rat_ = 1;
    else
        s.res_ = 1;
    return s;
}

Scalar Scalar::from_integer(unsigned long characteristic, const Integer& z) {
    Scalar s = zero(characteristic);
    if (s.p_ == 0) {
        s.rat_ = z;
    } else {
        mpz_class r = z % mpz_class(s.p_);
        if (r < 0) r += s.p_;
        s.res_ = r.get_ui();
    }
    return s;
}

Scalar Scalar::from_rational(unsigned long characteristic, const mpq_class& q) {
    Scalar s = zero(characteristic);
    if (s.p_ == 0) {
        s.rat_ = q;
        s.rat_.canonicalize();
    } else {
        Scalar num = from_integer(s.p_, q.get_num());
        Scalar den = from_integer(s.p_, q.get_den());
        if (den.is_zero())
            throw usage_error("denominator vanishes in GF(" +
                              std::to_string(s.p_) + ")");
        s.res_ = mod_mul(num.res_, mod_inverse(den.res_, s.p_), s.p_);
    }
    return s;
}

bool Scalar::is_zero() const { return p_ == 0 ? rat_ == 0 : res_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? rat_ == 1 : res_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
    if (p_ != o.p_)
        throw usage_error("scalar arithmetic across different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s = *this;
    if (p_ == 0) {
        s.rat_ += o.rat_;
    } else {
        unsigned long r = res_ + o.res_;  // p < 2^62, no overflow
        s.res_ = r >= p_ ? r - p_ : r;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (is_one()) return o;
    if (o.is_one()) return *this;
    Scalar s = *this;
    if (p_ == 0)
        s.rat_ *= o.rat_;
    else
        s.res_ = mod_mul(res_, o.res_, p_);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    if (o.is_zero()) throw usage_error("scalar division by zero");
    if (o.is_one()) return *this;
    Scalar s = *this;
    if (p_ == 0)
        s.rat_ /= o.rat_;
    else
        s.res_ = mod_mul(res_, mod_inverse(o.res_, p_), p_);
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (p_ == 0)
        s.rat_ = -rat_;
    else
        s.res_ = res_ == 0 ? 0 : p_ - res_;
    return s;
}

Scalar Scalar::inverse() const { return one(p_) / *this; }

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return p_ == 0 ? rat_ == o.rat_ : res_ == o.res_;
}

const mpq_class& Scalar::rational() const {
    if (p_ != 0) throw usage_error("rational() on a GF(p) scalar");
    return rat_;
}

unsigned long Scalar::residue() const {
    if (p_ == 0) throw usage_error("residue() on a rational scalar");
    return res_;
}

std::string Scalar::str() const {
    if (p_ == 0) return rat_.get_str();
    return std::to_string(res_);
}

// ---------------------------------------------------------------------------
// ExponentVector

ExponentVector ExponentVector::of(const std::vector<unsigned long>& v) {
    ExponentVector e(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) e.c_[i] = v[i];
    return e;
}

Natural ExponentVector::total_degree() const {
    Natural d = 0;
    for (const auto& x : c_) d += x;
    return d;
}

bool ExponentVector::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

namespace {
void check_arity(std::size_t a, std::size_t b) {
    if (a != b)
        throw usage_error("arity mismatch: " + std::to_string(a) + " vs " +
                          std::to_string(b));
}
}  // namespace

bool divides(const ExponentVector& a, const ExponentVector& b) {
    check_arity(a.arity(), b.arity());
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    check_arity(a.arity(), b.arity());
    ExponentVector r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i)
        r[i] = a[i] >= b[i] ? a[i] : b[i];
    return r;
}

ExponentVector sum(const ExponentVector& a, const ExponentVector& b) {
    check_arity(a.arity(), b.arity());
    ExponentVector r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) r[i] = a[i] + b[i];
    return r;
}

ExponentVector difference(const ExponentVector& a, const ExponentVector& b) {
    check_arity(a.arity(), b.arity());
    ExponentVector r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (b[i] > a[i]) throw usage_error("negative exponent in difference");
        r[i] = a[i] - b[i];
    }
    return r;
}

int lex_compare(const ExponentVector& a, const ExponentVector& b) {
    check_arity(a.arity(), b.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

bool deg_lex_less(const ExponentVector& a, const ExponentVector& b) {
    int c = cmp(a.total_degree(), b.total_degree());
    if (c != 0) return c < 0;
    return lex_compare(a, b) < 0;
}

IntVector signed_difference(const ExponentVector& a, const ExponentVector& b) {
    check_arity(a.arity(), b.arity());
    IntVector r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool is_zero(const IntVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

ExponentVector positive_part(const IntVector& v) {
    ExponentVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] > 0) r[i] = v[i];
    return r;
}

ExponentVector negative_part(const IntVector& v) {
    ExponentVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] < 0) r[i] = -v[i];
    return r;
}

// ---------------------------------------------------------------------------
// TermOrder

TermOrder::TermOrder(Kind kind, std::vector<std::size_t> perm)
    : kind_(kind), perm_(std::move(perm)) {
    std::vector<bool> seen(perm_.size(), false);
    for (std::size_t v : perm_) {
        if (v >= perm_.size() || seen[v])
            throw usage_error("order permutation is not a bijection");
        seen[v] = true;
    }
}

namespace {
std::vector<std::size_t> identity_perm(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    return p;
}
}  // namespace

TermOrder TermOrder::lex(std::size_t n) { return TermOrder(Kind::Lex, identity_perm(n)); }
TermOrder TermOrder::deglex(std::size_t n) {
    return TermOrder(Kind::DegLex, identity_perm(n));
}
TermOrder TermOrder::degrevlex(std::size_t n) {
    return TermOrder(Kind::DegRevLex, identity_perm(n));
}

TermOrder TermOrder::weighted_revlex(std::vector<Natural> weights, std::size_t last) {
    std::size_t n = weights.size();
    if (last >= n) throw usage_error("weighted_revlex: variable out of range");
    for (const auto& w : weights)
        if (w <= 0) throw usage_error("weighted_revlex: weights must be positive");
    std::vector<std::size_t> perm;
    perm.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        if (i != last) perm.push_back(i);
    perm.push_back(last);
    TermOrder o(Kind::DegRevLex, std::move(perm));
    o.weights_ = std::move(weights);
    return o;
}

Natural TermOrder::degree(const ExponentVector& e) const {
    if (weights_.empty()) return e.total_degree();
    check_arity(e.arity(), weights_.size());
    Natural d = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) d += weights_[i] * e[i];
    return d;
}

int TermOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
    check_arity(a.arity(), perm_.size());
    check_arity(b.arity(), perm_.size());
    switch (kind_) {
        case Kind::Lex:
            for (std::size_t v : perm_) {
                int c = cmp(a[v], b[v]);
                if (c != 0) return c;
            }
            return 0;
        case Kind::DegLex: {
            int c = cmp(degree(a), degree(b));
            if (c != 0) return c;
            for (std::size_t v : perm_) {
                int cc = cmp(a[v], b[v]);
                if (cc != 0) return cc;
            }
            return 0;
        }
        case Kind::DegRevLex: {
            int c = cmp(degree(a), degree(b));
            if (c != 0) return c;
            // Reverse scan; the monomial with the SMALLER exponent in the
            // last differing position is the larger one.
            for (std::size_t k = perm_.size(); k-- > 0;) {
                std::size_t v = perm_[k];
                int cc = cmp(a[v], b[v]);
                if (cc != 0) return -cc;
            }
            return 0;
        }
    }
    return 0;
}

bool TermOrder::operator==(const TermOrder& o) const {
    return kind_ == o.kind_ && perm_ == o.perm_ && weights_ == o.weights_;
}

std::string TermOrder::describe() const {
    std::string s;
    switch (kind_) {
        case Kind::Lex: s = "lex"; break;
        case Kind::DegLex: s = "deglex"; break;
        case Kind::DegRevLex: s = weights_.empty() ? "degrevlex" : "wdegrevlex"; break;
    }
    s += "(";
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(perm_[i]);
    }
    s += ")";
    return s;
}

// ---------------------------------------------------------------------------
// BinomialElement

BinomialElement BinomialElement::zero(std::size_t arity) {
    BinomialElement e;
    e.kind_ = Kind::Zero;
    e.arity_ = arity;
    return e;
}

BinomialElement BinomialElement::monomial(ExponentVector e) {
    BinomialElement b;
    b.kind_ = Kind::Monomial;
    b.arity_ = e.arity();
    b.lead_ = std::move(e);
    return b;
}

BinomialElement BinomialElement::binomial(ExponentVector lead, Scalar trail_coeff,
                                          ExponentVector trail) {
    if (trail_coeff.is_zero())
        throw usage_error("binomial with zero trail coefficient");
    if (lead.arity() != trail.arity())
        throw usage_error("binomial with mismatched term arities");
    BinomialElement b;
    b.kind_ = Kind::Binomial;
    b.arity_ = lead.arity();
    b.lead_ = std::move(lead);
    b.tc_ = std::move(trail_coeff);
    b.trail_ = std::move(trail);
    return b;
}

const ExponentVector& BinomialElement::lead() const {
    if (kind_ == Kind::Zero) throw usage_error("lead() of the zero element");
    return lead_;
}

const ExponentVector& BinomialElement::trail() const {
    if (kind_ != Kind::Binomial) throw usage_error("trail() of a non-binomial");
    return trail_;
}

const Scalar& BinomialElement::trail_coeff() const {
    if (kind_ != Kind::Binomial) throw usage_error("trail_coeff() of a non-binomial");
    return tc_;
}

Scalar BinomialElement::lambda() const { return -trail_coeff(); }

bool BinomialElement::is_pure() const {
    return kind_ == Kind::Binomial && (-tc_).is_one();
}

IntVector BinomialElement::move() const {
    if (kind_ != Kind::Binomial) throw usage_error("move() of a non-binomial");
    return signed_difference(lead_, trail_);
}

Natural BinomialElement::degree() const {
    switch (kind_) {
        case Kind::Zero: return 0;
        case Kind::Monomial: return lead_.total_degree();
        case Kind::Binomial: {
            Natural dl = lead_.total_degree(), dt = trail_.total_degree();
            return dl >= dt ? dl : dt;
        }
    }
    return 0;
}

bool BinomialElement::operator==(const BinomialElement& o) const {
    if (kind_ != o.kind_ || arity_ != o.arity_) return false;
    switch (kind_) {
        case Kind::Zero: return true;
        case Kind::Monomial: return lead_ == o.lead_;
        case Kind::Binomial:
            return lead_ == o.lead_ && trail_ == o.trail_ && tc_ == o.tc_;
    }
    return false;
}

BinomialElement normalize(const Scalar& c1, const ExponentVector& u,
                          const Scalar& c2, const ExponentVector& v,
                          const TermOrder& order) {
    check_arity(u.arity(), v.arity());
    std::size_t n = u.arity();
    bool z1 = c1.is_zero(), z2 = c2.is_zero();
    if (z1 && z2) return BinomialElement::zero(n);
    if (z1) return BinomialElement::monomial(v);
    if (z2) return BinomialElement::monomial(u);
    if (u == v) {
        Scalar c = c1 + c2;
        if (c.is_zero()) return BinomialElement::zero(n);
        return BinomialElement::monomial(u);
    }
    int c = order.compare(u, v);
    if (c == 0) throw internal_error("term order failed to separate distinct monomials");
    const ExponentVector& le = c > 0 ? u : v;
    const ExponentVector& te = c > 0 ? v : u;
    const Scalar& lc = c > 0 ? c1 : c2;
    const Scalar& tc = c > 0 ? c2 : c1;
    return BinomialElement::binomial(le, tc / lc, te);
}

bool element_less(const BinomialElement& a, const BinomialElement& b) {
    int c = cmp(a.degree(), b.degree());
    if (c != 0) return c < 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind();
    if (a.is_zero()) return false;
    if (a.lead() != b.lead()) return deg_lex_less(a.lead(), b.lead());
    if (a.is_monomial()) return false;
    if (a.trail() != b.trail()) return deg_lex_less(a.trail(), b.trail());
    return false;
}

// ---------------------------------------------------------------------------
// IdealPresentation

bool IdealPresentation::is_pure() const {
    for (const auto& g : generators)
        if (!g.is_pure()) return false;
    return true;  // vacuously pure when empty
}

IdealPresentation make_presentation(unsigned long characteristic,
                                    std::vector<std::string> vars,
                                    const std::vector<BinomialElement>& gens) {
    check_characteristic(characteristic);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i].empty()) throw usage_error("empty variable name");
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw usage_error("duplicate variable name: " + vars[i]);
    }
    IdealPresentation p;
    p.characteristic = characteristic;
    p.vars = std::move(vars);
    TermOrder ambient = TermOrder::degrevlex(p.arity());
    for (const auto& g : gens) {
        if (g.arity() != p.arity())
            throw usage_error("generator arity does not match variable count");
        BinomialElement canon = g;
        if (g.is_binomial()) {
            if (g.trail_coeff().characteristic() != characteristic)
                throw usage_error("generator coefficient from the wrong field");
            canon = normalize(Scalar::one(characteristic), g.lead(),
                              g.trail_coeff(), g.trail(), ambient);
        }
        if (canon.is_zero())
            throw usage_error("zero generator in presentation");
        if (std::find(p.generators.begin(), p.generators.end(), canon) ==
            p.generators.end())
            p.generators.push_back(canon);
    }
    return p;
}

std::vector<IntVector> generator_moves(const IdealPresentation& p) {
    std::vector<IntVector> moves;
    for (const auto& g : p.generators)
        if (g.is_binomial()) moves.push_back(g.move());
    return moves;
}

bool standard_homogeneous(const IdealPresentation& p) {
    for (const auto& g : p.generators)
        if (g.is_binomial() && g.lead().total_degree() != g.trail().total_degree())
            return false;
    return true;
}

std::vector<std::string> default_var_names(std::size_t n) {
    std::vector<std::string> v;
    v.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

}  // namespace bideal
