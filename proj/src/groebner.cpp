#include "bideal/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace bideal {

namespace {

// Raw working form: up to two actual summands, not yet canonical.
struct RawPair {
    std::vector<Term> terms;  // size 0..2
};

BinomialElement to_canonical(const RawPair& r, std::size_t arity,
                             unsigned long characteristic, const TermOrder& order) {
    Scalar z = Scalar::zero(characteristic);
    if (r.terms.empty()) return BinomialElement::zero(arity);
    if (r.terms.size() == 1)
        return normalize(r.terms[0].coeff, r.terms[0].expo, z,
                         ExponentVector(arity), order);
    return normalize(r.terms[0].coeff, r.terms[0].expo, r.terms[1].coeff,
                     r.terms[1].expo, order);
}

// e - c * x^shift * g, where x^m is the term of e being rewritten and
// g = x^L (+ tc x^T) with m = shift + L. Removes that term, possibly adds the
// shifted trail of g, merges like terms.
RawPair rewrite_term(const RawPair& e, std::size_t which, const BinomialElement& g) {
    const Term& t = e.terms[which];
    ExponentVector shift = difference(t.expo, g.lead());
    RawPair out;
    for (std::size_t i = 0; i < e.terms.size(); ++i)
        if (i != which) out.terms.push_back(e.terms[i]);
    if (g.is_binomial()) {
        // e - c x^shift (x^L + tc x^T) = (e minus the term) - c*tc x^{shift+T}
        Term add{-(t.coeff * g.trail_coeff()), sum(shift, g.trail())};
        bool merged = false;
        for (auto& o : out.terms) {
            if (o.expo == add.expo) {
                o.coeff = o.coeff + add.coeff;
                merged = true;
                break;
            }
        }
        if (!merged) out.terms.push_back(std::move(add));
        out.terms.erase(std::remove_if(out.terms.begin(), out.terms.end(),
                                       [](const Term& x) { return x.coeff.is_zero(); }),
                        out.terms.end());
    }
    return out;
}

// Support fingerprint of the first 64 coordinates; bit k set when x_k occurs.
// (mask(a) & ~mask(b)) != 0 certifies that a cannot divide b, so the masks
// reject most divisibility candidates with one AND. Coordinates past 63 are
// simply not represented (the filter stays sound, just less selective).
std::uint64_t support_mask(const ExponentVector& e) {
    std::uint64_t m = 0;
    const std::size_t top = e.arity() < 64 ? e.arity() : 64;
    for (std::size_t i = 0; i < top; ++i)
        if (e[i] != 0) m |= std::uint64_t{1} << i;
    return m;
}

// Fully reduces a raw element modulo `basis` minus the element at `skip`:
// rewrites any term divisible by some basis lead until none is. Deterministic
// (first applicable term in order-descending position, first applicable basis
// element). Pass skip >= basis.size() to use the whole basis.
RawPair reduce_skip(RawPair e, const std::vector<BinomialElement>& basis,
                    std::size_t skip, const TermOrder& order) {
    bool changed = true;
    while (changed && !e.terms.empty()) {
        changed = false;
        // Keep the order-largest term at index 0 so lead reduction is tried
        // first; with <= 2 terms a single comparison suffices.
        if (e.terms.size() == 2 &&
            order.less(e.terms[0].expo, e.terms[1].expo))
            std::swap(e.terms[0], e.terms[1]);
        for (std::size_t which = 0; which < e.terms.size() && !changed; ++which) {
            for (std::size_t g = 0; g < basis.size(); ++g) {
                if (g == skip || basis[g].is_zero()) continue;
                if (divides(basis[g].lead(), e.terms[which].expo)) {
                    e = rewrite_term(e, which, basis[g]);
                    changed = true;
                    break;
                }
            }
        }
    }
    return e;
}

RawPair reduce_raw(RawPair e, const std::vector<BinomialElement>& basis,
                   const TermOrder& order) {
    return reduce_skip(std::move(e), basis, basis.size(), order);
}

// Reduction against the live slice of the working basis, with the mask
// prefilter. Same determinism contract as reduce_skip.
RawPair reduce_live(RawPair e, const std::vector<BinomialElement>& elems,
                    const std::vector<std::uint64_t>& mask,
                    const std::vector<char>& live, const TermOrder& order) {
    bool changed = true;
    while (changed && !e.terms.empty()) {
        changed = false;
        if (e.terms.size() == 2 &&
            order.less(e.terms[0].expo, e.terms[1].expo))
            std::swap(e.terms[0], e.terms[1]);
        for (std::size_t which = 0; which < e.terms.size() && !changed; ++which) {
            const std::uint64_t tm = support_mask(e.terms[which].expo);
            for (std::size_t g = 0; g < elems.size(); ++g) {
                if (!live[g] || (mask[g] & ~tm) != 0) continue;
                if (divides(elems[g].lead(), e.terms[which].expo)) {
                    e = rewrite_term(e, which, elems[g]);
                    changed = true;
                    break;
                }
            }
        }
    }
    return e;
}

RawPair raw_of(const BinomialElement& b, unsigned long characteristic) {
    RawPair r;
    if (b.is_zero()) return r;
    r.terms.push_back(Term{Scalar::one(characteristic), b.lead()});
    if (b.is_binomial()) r.terms.push_back(Term{b.trail_coeff(), b.trail()});
    return r;
}

// S-polynomial of canonical f, g: x^{L-lf} f - x^{L-lg} g with L the lcm of
// the leads. The lead terms cancel by construction.
RawPair s_polynomial(const BinomialElement& f, const BinomialElement& g,
                     unsigned long characteristic) {
    ExponentVector L = lcm(f.lead(), g.lead());
    RawPair r;
    if (f.is_binomial())
        r.terms.push_back(Term{f.trail_coeff(), sum(difference(L, f.lead()), f.trail())});
    if (g.is_binomial()) {
        Term t{-g.trail_coeff(), sum(difference(L, g.lead()), g.trail())};
        bool merged = false;
        for (auto& o : r.terms) {
            if (o.expo == t.expo) {
                o.coeff = o.coeff + t.coeff;
                merged = true;
            }
        }
        if (!merged) r.terms.push_back(std::move(t));
    }
    r.terms.erase(std::remove_if(r.terms.begin(), r.terms.end(),
                                 [](const Term& x) { return x.coeff.is_zero(); }),
                  r.terms.end());
    (void)characteristic;
    return r;
}

// Queued S-pair. The lcm itself is recomputed on demand; keeping the queue
// at three words per pair is what lets large runs fit in memory.
struct SPair {
    Natural degree;  // order-degree of the lead lcm (normal strategy)
    std::uint32_t i, j;  // i < j, indices into the working basis
};

// Heap comparator: true when a should be popped after b.
bool spair_later(const SPair& a, const SPair& b) {
    int c = cmp(a.degree, b.degree);
    if (c != 0) return c > 0;
    if (a.j != b.j) return a.j > b.j;
    return a.i > b.i;
}

bool coprime_leads(const BinomialElement& f, const BinomialElement& g) {
    const ExponentVector& a = f.lead();
    const ExponentVector& b = g.lead();
    for (std::size_t k = 0; k < a.arity(); ++k)
        if (a[k] > 0 && b[k] > 0) return false;
    return true;
}

}  // namespace

ReducedGroebnerBasis buchberger(const IdealPresentation& p, const TermOrder& order,
                                const BuchbergerOptions& opts) {
    if (order.arity() != p.arity())
        throw usage_error("term order arity does not match presentation");
    const unsigned long ch = p.characteristic;
    const std::size_t n = p.arity();

    std::vector<BinomialElement> elems;
    std::vector<std::uint64_t> mask;  // lead support fingerprints
    std::vector<char> live;           // lead not superseded by a later element
    std::vector<SPair> heap;

    // Registers a fully reduced element and queues its S-pairs, pruned by the
    // Gebauer-Moller criteria: an equal-lcm class is discharged entirely by
    // any coprime-lead member and otherwise contributes its smallest index,
    // and a pair whose lcm properly contains another new pair's lcm is
    // dropped. Elements whose leads the newcomer divides retire afterwards,
    // so their pairs with the newcomer are still formed.
    auto register_element = [&](BinomialElement c) {
        if (elems.size() >= std::numeric_limits<std::uint32_t>::max())
            throw internal_error("basis grew past the pair index range");
        const std::uint32_t t = static_cast<std::uint32_t>(elems.size());
        elems.push_back(std::move(c));
        mask.push_back(support_mask(elems[t].lead()));
        live.push_back(1);

        struct Cand {
            Natural degree;
            ExponentVector lcm_e;
            std::uint64_t lcm_mask;
            std::uint32_t i;
            bool coprime;
        };
        std::vector<Cand> cands;
        for (std::uint32_t i = 0; i < t; ++i) {
            if (!live[i]) continue;
            ExponentVector L = lcm(elems[i].lead(), elems[t].lead());
            Natural d = order.degree(L);
            if (opts.degree_cap && d > *opts.degree_cap) continue;
            cands.push_back(Cand{std::move(d), std::move(L), mask[i] | mask[t], i,
                                 coprime_leads(elems[i], elems[t])});
        }
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            int c = cmp(a.degree, b.degree);
            if (c != 0) return c < 0;
            c = lex_compare(a.lcm_e, b.lcm_e);
            if (c != 0) return c < 0;
            return a.i < b.i;
        });
        std::vector<Cand> reps;
        for (std::size_t k = 0; k < cands.size();) {
            std::size_t end = k + 1;
            bool coprime = cands[k].coprime;
            while (end < cands.size() && cands[end].lcm_e == cands[k].lcm_e) {
                coprime = coprime || cands[end].coprime;
                ++end;
            }
            if (!coprime) reps.push_back(std::move(cands[k]));
            k = end;
        }
        std::vector<char> dominated(reps.size(), 0);
        for (std::size_t a = 0; a < reps.size(); ++a) {
            // Sorted by degree, so only earlier entries can be proper
            // divisors; equal lcms were already collapsed, so divisibility
            // here is automatically proper.
            for (std::size_t b = 0; b < a && !dominated[a]; ++b) {
                if (dominated[b] || (reps[b].lcm_mask & ~reps[a].lcm_mask) != 0)
                    continue;
                dominated[a] = divides(reps[b].lcm_e, reps[a].lcm_e);
            }
        }
        for (std::size_t a = 0; a < reps.size(); ++a) {
            if (dominated[a]) continue;
            heap.push_back(SPair{std::move(reps[a].degree), reps[a].i, t});
            std::push_heap(heap.begin(), heap.end(), spair_later);
        }

        for (std::uint32_t i = 0; i < t; ++i)
            if (live[i] && (mask[t] & ~mask[i]) == 0 &&
                divides(elems[t].lead(), elems[i].lead()))
                live[i] = 0;
    };

    for (const auto& g : p.generators) {
        // Re-normalize under the requested order (presentations are stored
        // canonical under the ambient order, which may differ).
        RawPair r = raw_of(g, ch);
        BinomialElement c = to_canonical(r, n, ch, order);
        c = to_canonical(reduce_live(raw_of(c, ch), elems, mask, live, order),
                         n, ch, order);
        if (c.is_zero()) continue;
        register_element(std::move(c));
    }

    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), spair_later);
        SPair pr = std::move(heap.back());
        heap.pop_back();
        const BinomialElement& f = elems[pr.i];
        const BinomialElement& g = elems[pr.j];
        ExponentVector L = lcm(f.lead(), g.lead());
        // Chain criterion: a third lead dividing the lcm, with both mixed
        // lcms proper divisors, splits this pair into two strictly smaller
        // ones that the queue accounts for.
        const std::uint64_t lm = mask[pr.i] | mask[pr.j];
        bool covered = false;
        for (std::size_t k = 0; k < elems.size() && !covered; ++k) {
            if (k == pr.i || k == pr.j || (mask[k] & ~lm) != 0) continue;
            if (!divides(elems[k].lead(), L)) continue;
            if (lcm(elems[k].lead(), f.lead()) == L) continue;
            if (lcm(elems[k].lead(), g.lead()) == L) continue;
            covered = true;
        }
        if (covered) continue;
        RawPair sp = s_polynomial(f, g, ch);
        BinomialElement red = to_canonical(
            reduce_live(std::move(sp), elems, mask, live, order), n, ch, order);
        if (red.is_zero()) continue;
        register_element(std::move(red));
    }

    // Autoreduction. Leads first: keep elements whose lead no other kept
    // element's lead divides (processing by increasing lead keeps the
    // minimal ones).
    std::vector<std::size_t> idx(elems.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return order.less(elems[a].lead(), elems[b].lead());
    });
    std::vector<BinomialElement> kept;
    for (std::size_t id : idx) {
        bool redundant = false;
        for (const auto& k : kept)
            if (divides(k.lead(), elems[id].lead())) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(elems[id]);
    }
    // Tails second: fully reduce each element's tail against the others. The
    // element itself is excluded as a reducer; its lead cannot apply to its
    // own strictly smaller tail anyway, but self-rewriting the lead would
    // cancel the element outright.
    std::vector<BinomialElement> reduced;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        BinomialElement r = to_canonical(
            reduce_skip(raw_of(kept[i], ch), kept, i, order), n, ch, order);
        if (r.is_zero())
            throw internal_error("autoreduction killed a lead-irreducible element");
        reduced.push_back(r);
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const BinomialElement& a, const BinomialElement& b) {
                  return order.less(a.lead(), b.lead());
              });

    ReducedGroebnerBasis gb{order, ch, p.vars, std::move(reduced), opts.degree_cap};
    return gb;
}

namespace {

struct FirstStrategy final : ReduceStrategy {
    std::size_t pick(std::size_t) const override { return 0; }
};

}  // namespace

std::optional<Term> normal_form(const ExponentVector& e,
                                const ReducedGroebnerBasis& gb,
                                const ReduceStrategy& strategy) {
    if (e.arity() != gb.order.arity())
        throw usage_error("monomial arity does not match basis");
    Term cur{Scalar::one(gb.characteristic), e};
    std::vector<std::size_t> candidates;
    for (;;) {
        candidates.clear();
        for (std::size_t i = 0; i < gb.elements.size(); ++i)
            if (divides(gb.elements[i].lead(), cur.expo)) candidates.push_back(i);
        if (candidates.empty()) return cur;
        const BinomialElement& g = gb.elements[candidates[strategy.pick(candidates.size())]];
        if (g.is_monomial()) return std::nullopt;
        // x^L = -tc x^T modulo the ideal, so x^cur rewrites with factor -tc.
        cur.coeff = cur.coeff * (-g.trail_coeff());
        cur.expo = sum(difference(cur.expo, g.lead()), g.trail());
    }
}

std::optional<Term> normal_form(const ExponentVector& e,
                                const ReducedGroebnerBasis& gb) {
    FirstStrategy first;
    return normal_form(e, gb, first);
}

BinomialElement reduce_element(const BinomialElement& e,
                               const ReducedGroebnerBasis& gb) {
    RawPair r = raw_of(e, gb.characteristic);
    return to_canonical(reduce_raw(std::move(r), gb.elements, gb.order),
                        gb.order.arity(), gb.characteristic, gb.order);
}

bool member(const BinomialElement& b, const ReducedGroebnerBasis& gb) {
    if (b.is_zero()) return true;
    if (b.arity() != gb.order.arity())
        throw usage_error("element arity does not match basis");
    if (b.is_monomial()) return !normal_form(b.lead(), gb).has_value();
    // NF is linear: NF(x^u + tc x^v) = NF(x^u) + tc NF(x^v).
    auto nu = normal_form(b.lead(), gb);
    auto nv = normal_form(b.trail(), gb);
    if (!nu && !nv) return true;
    if (!nu || !nv) return false;
    return nu->expo == nv->expo &&
           (nu->coeff + b.trail_coeff() * nv->coeff).is_zero();
}

bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b,
                 const TermOrder& order) {
    if (a.characteristic != b.characteristic)
        throw usage_error("ideal_equal across different fields");
    if (a.arity() != b.arity())
        throw usage_error("ideal_equal across different variable counts");
    // Mutual membership only consults normal forms up to the largest
    // generator degree, so for standard-homogeneous input under a
    // degree-refining order a degree-truncated basis decides it exactly.
    BuchbergerOptions opts;
    if (standard_homogeneous(a) && standard_homogeneous(b) &&
        !order.is_weighted() && order.kind() != TermOrder::Kind::Lex) {
        Natural cap = 0;
        for (const auto& g : a.generators)
            if (g.degree() > cap) cap = g.degree();
        for (const auto& g : b.generators)
            if (g.degree() > cap) cap = g.degree();
        opts.degree_cap = cap;
    }
    ReducedGroebnerBasis ga = buchberger(a, order, opts);
    ReducedGroebnerBasis gbb = buchberger(b, order, opts);
    for (const auto& g : b.generators)
        if (!member(g, ga)) return false;
    for (const auto& g : a.generators)
        if (!member(g, gbb)) return false;
    return true;
}

std::optional<ExponentVector> contains_monomial(const ReducedGroebnerBasis& gb) {
    std::optional<ExponentVector> best;
    for (const auto& g : gb.elements) {
        if (!g.is_monomial()) continue;
        if (!best || gb.order.less(g.lead(), *best)) best = g.lead();
    }
    return best;
}

}  // namespace bideal
