#include "bideal/graver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "bideal/kernels.hpp"
#include "bideal/toric.hpp"

namespace bideal {

namespace {

// Unordered exponent pair {hi, lo}, stored with hi > lo under the ambient
// order so equality is structural.
struct Pair {
    ExponentVector hi, lo;
    bool operator==(const Pair& o) const { return hi == o.hi && lo == o.lo; }
};

// Divisibility of unordered pairs: q divides p componentwise in one of the
// two slot matchings. This is the Graver domination relation.
bool pair_dominates(const Pair& q, const Pair& p) {
    if (divides(q.hi, p.hi) && divides(q.lo, p.lo)) return true;
    return divides(q.lo, p.hi) && divides(q.hi, p.lo);
}

void enumerate_degree(std::size_t var, unsigned long remaining, ExponentVector& cur,
                      std::vector<ExponentVector>& out) {
    if (var + 1 == cur.arity()) {
        cur[var] = remaining;
        out.push_back(cur);
        return;
    }
    for (unsigned long e = remaining + 1; e-- > 0;) {
        cur[var] = e;
        enumerate_degree(var + 1, remaining - e, cur, out);
    }
}

std::vector<ExponentVector> monomials_of_degree(std::size_t arity, unsigned long d) {
    if (arity == 0) return {};
    mpz_class count;
    mpz_bin_uiui(count.get_mpz_t(), d + arity - 1, arity - 1);
    if (count > 2000000)
        throw usage_error("degree cap makes the level sweep enumerate too many monomials");
    std::vector<ExponentVector> out;
    out.reserve(count.get_ui());
    ExponentVector cur(arity);
    enumerate_degree(0, d, cur, out);
    return out;
}

void require_pure_basis(const ReducedGroebnerBasis& gb) {
    for (const auto& e : gb.elements)
        if (!e.is_pure())
            throw usage_error("primitivity is only defined modulo a pure ideal");
}

// Exponent of the normal form of a monomial modulo a pure reduced basis.
// Pure rewriting never changes the coefficient and never kills a monomial.
ExponentVector pure_nf(const ExponentVector& e, const ReducedGroebnerBasis& gb) {
    auto nf = normal_form(e, gb);
    if (!nf || !nf->coeff.is_one())
        throw internal_error("monomial vanished or picked up a scalar modulo a pure ideal");
    return nf->expo;
}

// All exponent vectors componentwise <= e, with a size guard.
std::vector<ExponentVector> divisor_box(const ExponentVector& e) {
    mpz_class size = 1;
    for (std::size_t i = 0; i < e.arity(); ++i) size *= e[i] + 1;
    if (size > 2000000)
        throw usage_error("divisor box too large for the primitivity scan");
    std::vector<ExponentVector> out;
    out.reserve(size.get_ui());
    ExponentVector cur(e.arity());
    std::size_t n = e.arity();
    // odometer over [0, e_i]
    for (;;) {
        out.push_back(cur);
        std::size_t i = 0;
        while (i < n && cur[i] == e[i]) cur[i++] = 0;
        if (i == n) break;
        cur[i] += 1;
    }
    return out;
}

// Graver basis of the lattice spanned by the generator moves, by reducing a
// basis of the lifted lattice {(m, -m)}: the reduced basis of that lattice
// ideal consists exactly of the lifted primitive vectors. Valid only when
// the presentation itself is the full lattice ideal of its moves, so this
// returns nullopt unless a strictly positive grading exists and the
// presentation equals its own saturation.
std::optional<std::vector<BinomialElement>> lattice_certificate(const IdealPresentation& p) {
    const std::size_t n = p.arity();
    if (p.generators.empty()) return std::vector<BinomialElement>{};
    if (!positive_grading(p)) return std::nullopt;
    if (!ideal_equal(saturate_all(p), p, TermOrder::degrevlex(n))) return std::nullopt;

    std::vector<IntVector> lifted;
    for (const auto& m : generator_moves(p)) {
        IntVector w(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = m[i];
            w[n + i] = -m[i];
        }
        lifted.push_back(std::move(w));
    }
    IdealPresentation lifted_ideal =
        lattice_basis_ideal(lifted, default_var_names(2 * n), p.characteristic);
    IdealPresentation lifted_sat = saturate_all(lifted_ideal);
    ReducedGroebnerBasis gb = buchberger(lifted_sat, TermOrder::degrevlex(2 * n));

    const TermOrder ambient = TermOrder::degrevlex(n);
    const Scalar one = Scalar::one(p.characteristic);
    std::vector<BinomialElement> out;
    for (const auto& e : gb.elements) {
        if (!e.is_pure())
            throw internal_error("lifted lattice basis is not pure");
        const ExponentVector& l = e.lead();
        const ExponentVector& t = e.trail();
        ExponentVector a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) {
            // shape x^a y^b - x^b y^a
            if (l[n + i] != t[i] || t[n + i] != l[i])
                throw internal_error("lifted reduced basis element is not of Lawrence shape");
            a[i] = l[i];
            b[i] = t[i];
        }
        BinomialElement proj = normalize(one, a, -one, b, ambient);
        if (!proj.is_pure())
            throw internal_error("projected lattice element is not a pure binomial");
        out.push_back(std::move(proj));
    }
    std::sort(out.begin(), out.end(), element_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

bool is_primitive(const BinomialElement& b, const ReducedGroebnerBasis& gb) {
    if (!b.is_pure())
        throw usage_error("primitivity is only defined for pure binomials");
    require_pure_basis(gb);
    if (!member(b, gb))
        throw usage_error("primitivity asked for a binomial outside the ideal");

    const ExponentVector& u = b.lead();
    const ExponentVector& v = b.trail();
    std::map<ExponentVector, std::vector<const ExponentVector*>, DegLexLess> by_nf;
    std::vector<ExponentVector> ubox = divisor_box(u);
    for (const auto& up : ubox) by_nf[pure_nf(up, gb)].push_back(&up);
    for (const auto& vp : divisor_box(v)) {
        auto it = by_nf.find(pure_nf(vp, gb));
        if (it == by_nf.end()) continue;
        for (const ExponentVector* up : it->second) {
            if (*up == vp) continue;              // zero, not a binomial
            if (*up == u && vp == v) continue;    // b itself
            return false;
        }
    }
    return true;
}

GraverResult graver_basis(const IdealPresentation& p, std::optional<Natural> degree_cap,
                          std::size_t window, ExecutionPolicy policy) {
    if (!p.is_pure())
        throw usage_error("Graver enumeration requires a pure presentation");
    const std::size_t n = p.arity();
    if (n == 0) throw usage_error("Graver enumeration needs at least one variable");

    Natural maxdeg = 0;
    for (const auto& g : p.generators) maxdeg = std::max(maxdeg, g.degree());
    Natural cap = degree_cap.value_or(2 * maxdeg + 4);
    if (cap < maxdeg)
        throw usage_error("Graver degree cap below the largest generator degree");
    if (!cap.fits_ulong_p())
        throw usage_error("Graver degree cap out of range");
    const unsigned long cap_ul = cap.get_ui();

    const TermOrder ambient = TermOrder::degrevlex(n);
    const ReducedGroebnerBasis gb = buchberger(p, ambient);
    require_pure_basis(gb);

    // Fiber buckets: normal-form exponent -> members seen so far. Two
    // monomials of a pure ideal differ by an ideal element exactly when their
    // normal forms coincide.
    std::map<ExponentVector, std::vector<ExponentVector>, DegLexLess> buckets;
    std::vector<Pair> accepted;
    std::vector<std::size_t> level_counts(cap_ul + 1, 0);

    for (unsigned long d = 0; d <= cap_ul; ++d) {
        std::vector<ExponentVector> monos = monomials_of_degree(n, d);
        std::vector<std::optional<Term>> nfs = batch_normal_forms(monos, gb, policy);
        std::vector<Pair> cands;
        for (std::size_t i = 0; i < monos.size(); ++i) {
            if (!nfs[i] || !nfs[i]->coeff.is_one())
                throw internal_error("monomial vanished or picked up a scalar modulo a pure ideal");
            std::vector<ExponentVector>& members = buckets[nfs[i]->expo];
            for (const auto& other : members) {
                if (ambient.greater(monos[i], other))
                    cands.push_back({monos[i], other});
                else
                    cands.push_back({other, monos[i]});
            }
            members.push_back(monos[i]);
        }
        if (cands.empty()) continue;
        std::vector<char> dominated = parallel_mark(
            cands.size(),
            [&](std::size_t i) {
                for (const auto& q : accepted)
                    if (pair_dominates(q, cands[i])) return true;
                for (std::size_t j = 0; j < cands.size(); ++j)
                    if (j != i && pair_dominates(cands[j], cands[i])) return true;
                return false;
            },
            policy);
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (dominated[i]) continue;
            accepted.push_back(cands[i]);
            ++level_counts[d];
        }
    }

    GraverResult res;
    res.degree_cap = cap;
    res.window = window;
    res.observed_window = 0;
    for (unsigned long d = cap_ul + 1; d-- > 0 && level_counts[d] == 0;)
        ++res.observed_window;

    const Scalar one = Scalar::one(p.characteristic);
    for (const auto& pr : accepted) {
        BinomialElement e = normalize(one, pr.hi, -one, pr.lo, ambient);
        if (!e.is_pure())
            throw internal_error("accepted Graver pair did not normalize to a pure binomial");
        res.elements.push_back(std::move(e));
    }
    std::sort(res.elements.begin(), res.elements.end(), element_less);

    res.exact = false;
    if (auto cert = lattice_certificate(p)) {
        if (*cert == res.elements) {
            res.exact = true;
        } else {
            // The sweep is exact below its cap, so any disagreement there is
            // a bug; disagreement above the cap just means the cap was short.
            std::set<std::pair<std::vector<Natural>, std::vector<Natural>>> cert_keys;
            for (const auto& e : *cert)
                cert_keys.insert({e.lead().coords(), e.trail().coords()});
            for (const auto& e : res.elements)
                if (!cert_keys.count({e.lead().coords(), e.trail().coords()}))
                    throw internal_error("level sweep accepted a non-primitive element");
            std::set<std::pair<std::vector<Natural>, std::vector<Natural>>> sweep_keys;
            for (const auto& e : res.elements)
                sweep_keys.insert({e.lead().coords(), e.trail().coords()});
            for (const auto& e : *cert)
                if (!sweep_keys.count({e.lead().coords(), e.trail().coords()}) &&
                    e.degree() <= cap)
                    throw internal_error("level sweep missed a primitive element under its cap");
        }
    }
    return res;
}

IdealPresentation lawrence_lift(const std::vector<BinomialElement>& elements,
                                const IdealPresentation& base) {
    const std::size_t n = base.arity();
    std::vector<std::string> vars = base.vars;
    for (const auto& v : base.vars) vars.push_back(v + "'");

    const TermOrder big = TermOrder::degrevlex(2 * n);
    const Scalar one = Scalar::one(base.characteristic);
    std::vector<BinomialElement> gens;
    for (const auto& e : elements) {
        if (!e.is_pure() || e.arity() != n)
            throw usage_error("Lawrence lifting expects pure binomials over the base variables");
        ExponentVector lead(2 * n), trail(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            lead[i] = e.lead()[i];
            lead[n + i] = e.trail()[i];
            trail[i] = e.trail()[i];
            trail[n + i] = e.lead()[i];
        }
        gens.push_back(normalize(one, lead, -one, trail, big));
    }
    return make_presentation(base.characteristic, std::move(vars), gens);
}

std::vector<TermOrder> sample_orders(std::size_t arity) {
    if (arity == 0) throw usage_error("term orders need at least one variable");
    std::vector<TermOrder> out;
    for (auto kind : {TermOrder::Kind::Lex, TermOrder::Kind::DegLex, TermOrder::Kind::DegRevLex})
        for (std::size_t r = 0; r < arity; ++r) {
            std::vector<std::size_t> perm(arity);
            for (std::size_t i = 0; i < arity; ++i) perm[i] = (i + r) % arity;
            out.emplace_back(kind, std::move(perm));
        }
    return out;
}

UgbSample universal_gb_sample(const IdealPresentation& p, std::vector<TermOrder> orders) {
    if (orders.empty()) orders = sample_orders(p.arity());
    const TermOrder ambient = TermOrder::degrevlex(p.arity());

    auto canon_less = [](const BinomialElement& a, const BinomialElement& b) {
        if (element_less(a, b)) return true;
        if (element_less(b, a)) return false;
        std::string ta = a.is_binomial() ? a.trail_coeff().str() : std::string();
        std::string tb = b.is_binomial() ? b.trail_coeff().str() : std::string();
        return ta < tb;
    };

    UgbSample sample;
    sample.all_equal = true;
    std::vector<std::vector<BinomialElement>> canon_sets;
    for (const auto& o : orders) {
        if (o.arity() != p.arity())
            throw usage_error("sampled term order arity does not match the ideal");
        ReducedGroebnerBasis gb = buchberger(p, o);
        sample.bases.push_back({o, gb.elements});
        std::vector<BinomialElement> canon;
        for (const auto& e : gb.elements) {
            if (e.is_binomial())
                canon.push_back(normalize(Scalar::one(p.characteristic), e.lead(),
                                          e.trail_coeff(), e.trail(), ambient));
            else
                canon.push_back(e);
        }
        std::sort(canon.begin(), canon.end(), canon_less);
        canon_sets.push_back(std::move(canon));
    }
    for (const auto& s : canon_sets) {
        if (!canon_sets.empty() && !(s == canon_sets.front())) sample.all_equal = false;
        sample.union_elements.insert(sample.union_elements.end(), s.begin(), s.end());
    }
    std::sort(sample.union_elements.begin(), sample.union_elements.end(), canon_less);
    sample.union_elements.erase(
        std::unique(sample.union_elements.begin(), sample.union_elements.end()),
        sample.union_elements.end());
    return sample;
}

}  // namespace bideal
