#include "bideal/fibers.hpp"

#include <algorithm>
#include <set>

#include "bideal/indispensable.hpp"

namespace bideal {

ExplorationCaps default_caps(const IdealPresentation& p, const ExponentVector& u) {
    Natural maxdeg = u.total_degree();
    for (const auto& g : p.generators) {
        Natural d = g.degree();
        if (d > maxdeg) maxdeg = d;
    }
    if (maxdeg < 1) maxdeg = 1;
    return ExplorationCaps{4 * maxdeg, 100000};
}

std::optional<SameFiber> same_fiber(const ExponentVector& u, const ExponentVector& v,
                                    const ReducedGroebnerBasis& gb) {
    auto nu = normal_form(u, gb);
    auto nv = normal_form(v, gb);
    if (!nu && !nv) return SameFiber{Scalar::one(gb.characteristic), true};
    if (!nu || !nv) return std::nullopt;
    if (nu->expo != nv->expo) return std::nullopt;
    return SameFiber{nu->coeff / nv->coeff, false};
}

FiberView explore_fiber(const ExponentVector& u, const IdealPresentation& p,
                        const ReducedGroebnerBasis& gb, const ExplorationCaps& caps) {
    if (u.arity() != p.arity())
        throw usage_error("fiber representative arity does not match presentation");
    if (caps.node_cap == 0) throw usage_error("node cap must be positive");

    FiberView view;
    view.representative = u;
    view.caps = caps;
    view.is_monomial_fiber = !normal_form(u, gb).has_value();

    const Scalar one = Scalar::one(p.characteristic);
    std::set<ExponentVector, DegLexLess> frontier;
    std::set<IntVector> seen_moves;
    bool pruned = false;

    if (u.total_degree() > caps.degree_cap) {
        // Even the representative sits above the cap; report it alone.
        view.members.emplace(u, one);
        view.complete = false;
        return view;
    }

    view.members.emplace(u, one);
    frontier.insert(u);

    while (!frontier.empty()) {
        ExponentVector m = *frontier.begin();
        frontier.erase(frontier.begin());
        const Scalar c = view.members.at(m);

        for (const auto& g : p.generators) {
            if (!g.is_binomial()) continue;
            const ExponentVector& a = g.lead();
            const ExponentVector& b = g.trail();
            const Scalar lam = g.lambda();  // x^a = lam x^b modulo I
            for (int dir = 0; dir < 2; ++dir) {
                const ExponentVector& from = dir == 0 ? a : b;
                const ExponentVector& to = dir == 0 ? b : a;
                if (!divides(from, m)) continue;
                ExponentVector next = sum(difference(m, from), to);
                Scalar witness = dir == 0 ? c * lam : c / lam;
                auto it = view.members.find(next);
                if (it != view.members.end()) {
                    if (!view.is_monomial_fiber && it->second != witness) {
                        // Two witnesses for one member: (c1 - c2) x^next lies
                        // in I, so this is the monomial fiber. Cross-check.
                        if (normal_form(u, gb).has_value())
                            throw internal_error(
                                "witness collision in a non-monomial fiber");
                        view.is_monomial_fiber = true;
                    }
                    continue;
                }
                if (next.total_degree() > caps.degree_cap) {
                    pruned = true;
                    continue;
                }
                if (view.members.size() >= caps.node_cap) {
                    pruned = true;
                    continue;
                }
                view.members.emplace(next, std::move(witness));
                frontier.insert(next);
                seen_moves.insert(signed_difference(next, m));
            }
        }
    }

    view.complete = !pruned && !view.is_monomial_fiber;
    view.moves.assign(seen_moves.begin(), seen_moves.end());
    return view;
}

std::optional<MonomialFiber> monomial_fiber(const ReducedGroebnerBasis& gb) {
    MonomialFiber f;
    for (const auto& g : gb.elements)
        if (g.is_monomial()) f.witness_monomials.push_back(g.lead());
    if (f.witness_monomials.empty()) return std::nullopt;
    std::sort(f.witness_monomials.begin(), f.witness_monomials.end(), deg_lex_less);
    return f;
}

bool monomial_fiber_contains(const ReducedGroebnerBasis& gb, const ExponentVector& w) {
    return !normal_form(w, gb).has_value();
}

Tri fiber_leq(const ExponentVector& a, const ExponentVector& b,
              const IdealPresentation& p, const ReducedGroebnerBasis& gb,
              const ExplorationCaps& caps) {
    FiberView fb = explore_fiber(b, p, gb, caps);
    // The monomial fiber is the unique maximal fiber: everything sits below it.
    if (fb.is_monomial_fiber) return Tri::Yes;
    // ... and nothing else sits above it, so a maximal a can only fail.
    if (!normal_form(a, gb).has_value()) return Tri::No;
    for (const auto& [m, c] : fb.members)
        if (divides(a, m)) return Tri::Yes;
    return fb.complete ? Tri::No : Tri::Unknown;
}

Tri fiber_equiv(const ExponentVector& a, const ExponentVector& b,
                const IdealPresentation& p, const ReducedGroebnerBasis& gb,
                const ExplorationCaps& caps) {
    Tri ab = fiber_leq(a, b, p, gb, caps);
    if (ab == Tri::No) return Tri::No;
    Tri ba = fiber_leq(b, a, p, gb, caps);
    if (ba == Tri::No) return Tri::No;
    if (ab == Tri::Yes && ba == Tri::Yes) return Tri::Yes;
    return Tri::Unknown;
}

namespace {

// Key identifying a fiber exactly: the normal-form monomial of any member.
// The scalar of the normal form is the witness, not part of the fiber's
// identity, since x^u - lambda x^v lies in the ideal for lambda the ratio of
// the two normal-form coefficients whenever the monomials agree.
struct FiberKey {
    bool in_ideal;  // monomial fiber
    ExponentVector expo;

    bool operator<(const FiberKey& o) const {
        if (in_ideal != o.in_ideal) return in_ideal < o.in_ideal;
        return lex_compare(expo, o.expo) < 0;
    }
};

FiberKey fiber_key(const ExponentVector& u, const ReducedGroebnerBasis& gb) {
    auto nf = normal_form(u, gb);
    if (!nf) return FiberKey{true, ExponentVector(u.arity())};
    return FiberKey{false, nf->expo};
}

}  // namespace

Tri FiberClassPoset::class_leq(std::size_t a, std::size_t b) const {
    return leq[classes[a][0]][classes[b][0]];
}

bool FiberClassPoset::totally_ordered() const {
    for (std::size_t a = 0; a < classes.size(); ++a)
        for (std::size_t b = a + 1; b < classes.size(); ++b)
            if (class_leq(a, b) != Tri::Yes && class_leq(b, a) != Tri::Yes)
                return false;
    return true;
}

FiberClassPoset markov_fiber_classes(const IdealPresentation& p,
                                     const ReducedGroebnerBasis& gb,
                                     const ExplorationCaps& caps) {
    FiberClassPoset poset;
    if (p.generators.empty()) return poset;

    // One representative per distinct fiber; a fiber is identified by the
    // normal form of its members.
    std::map<FiberKey, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < p.generators.size(); ++i)
        buckets[fiber_key(p.generators[i].lead(), gb)].push_back(i);

    std::vector<std::pair<ExponentVector, std::vector<std::size_t>>> reps;
    for (auto& [key, gens] : buckets) {
        ExponentVector rep = p.generators[gens[0]].lead();
        for (std::size_t gi : gens) {
            const ExponentVector& cand = p.generators[gi].lead();
            if (deg_lex_less(cand, rep)) rep = cand;
        }
        reps.emplace_back(std::move(rep), std::move(gens));
    }
    std::sort(reps.begin(), reps.end(),
              [](const auto& a, const auto& b) { return deg_lex_less(a.first, b.first); });

    const std::size_t k = reps.size();
    for (auto& [rep, gens] : reps) {
        poset.reps.push_back(rep);
        poset.rep_generators.push_back(gens);
    }

    poset.leq.assign(k, std::vector<Tri>(k, Tri::Unknown));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            poset.leq[i][j] = i == j ? Tri::Yes
                                     : fiber_leq(poset.reps[i], poset.reps[j], p, gb,
                                                 caps);
        }
    }
    // Transitive closure of the Yes relation (Yes is sound, so derived Yes
    // entries are sound; No/Unknown entries are left as computed).
    for (std::size_t m = 0; m < k; ++m)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (poset.leq[i][m] == Tri::Yes && poset.leq[m][j] == Tri::Yes)
                    poset.leq[i][j] = Tri::Yes;

    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            if (poset.leq[i][j] == Tri::Unknown)
                poset.unknown_pairs.emplace_back(i, j);
            if (poset.leq[j][i] == Tri::Unknown)
                poset.unknown_pairs.emplace_back(j, i);
        }

    // Equivalence classes: mutual Yes. The relation is transitive, so a plain
    // sweep groups correctly.
    std::vector<bool> used(k, false);
    for (std::size_t i = 0; i < k; ++i) {
        if (used[i]) continue;
        std::vector<std::size_t> cls{i};
        used[i] = true;
        for (std::size_t j = i + 1; j < k; ++j)
            if (!used[j] && poset.leq[i][j] == Tri::Yes && poset.leq[j][i] == Tri::Yes) {
                cls.push_back(j);
                used[j] = true;
            }
        poset.classes.push_back(std::move(cls));
    }
    return poset;
}

namespace {

// Tri-valued strictness of Fbar_B < Fbar_target for each generator B, used by
// both the gamma graph and the indispensability check.
struct BelowResult {
    std::vector<std::size_t> strict;      // generator indices, conclusively below
    std::vector<std::size_t> unresolved;  // comparisons hitting the caps
};

BelowResult strictly_below_generators(const ExponentVector& target,
                                      const IdealPresentation& p,
                                      const ReducedGroebnerBasis& gb,
                                      const ExplorationCaps& caps) {
    BelowResult out;
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        const ExponentVector rep = p.generators[i].lead();
        Tri le = fiber_leq(rep, target, p, gb, caps);
        if (le == Tri::No) continue;
        Tri ge = fiber_leq(target, rep, p, gb, caps);
        if (le == Tri::Yes && ge == Tri::No) {
            out.strict.push_back(i);
        } else if (le == Tri::Unknown || ge == Tri::Unknown) {
            out.unresolved.push_back(i);
        }
        // le == Yes && ge == Yes: equivalent, not strictly below.
    }
    return out;
}

IdealPresentation subideal_from(const IdealPresentation& p,
                                const std::vector<std::size_t>& indices) {
    std::vector<BinomialElement> gens;
    for (std::size_t i : indices) gens.push_back(p.generators[i]);
    return make_presentation(p.characteristic, p.vars, gens);
}

}  // namespace

GammaGraph gamma_graph(const FiberView& fiber, const IdealPresentation& p,
                       const ReducedGroebnerBasis& gb, const ExplorationCaps& caps) {
    if (!fiber.complete)
        throw usage_error("gamma graph requires a completely explored fiber");

    BelowResult below = strictly_below_generators(fiber.representative, p, gb, caps);
    if (!below.unresolved.empty())
        throw inconclusive_error(
            "fiber comparison unresolved at caps for generator #" +
            std::to_string(below.unresolved.front() + 1));

    GammaGraph graph;
    graph.representative = fiber.representative;
    for (const auto& [m, c] : fiber.members) graph.vertices.push_back(m);
    graph.below = subideal_from(p, below.strict);

    ReducedGroebnerBasis sub_gb = buchberger(graph.below, gb.order);
    // x^u - lambda x^v lies in the subideal for some lambda iff the normal
    // forms of u and v share their monomial part (or both vanish).
    std::map<FiberKey, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
        auto nf = normal_form(graph.vertices[i], sub_gb);
        FiberKey key = nf ? FiberKey{false, nf->expo}
                          : FiberKey{true, ExponentVector(p.arity())};
        buckets[std::move(key)].push_back(i);
    }
    for (const auto& [key, verts] : buckets)
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b)
                graph.edges.emplace_back(verts[a], verts[b]);
    std::sort(graph.edges.begin(), graph.edges.end());
    return graph;
}

IndispensableMonomialCheck check_indispensable_monomial(
    const ExponentVector& u, const IdealPresentation& p,
    const ReducedGroebnerBasis& gb, const ExplorationCaps& caps) {
    IndispensableMonomialCheck out{Tri::Unknown, Tri::Unknown, Tri::Unknown,
                                   Tri::Unknown, false, {}};

    // Exact route: u among the minimal monomials of the generator supports.
    std::vector<ExponentVector> indisp = indispensable_monomials(p);
    out.support_route =
        std::find(indisp.begin(), indisp.end(), u) != indisp.end();

    FiberView fu = explore_fiber(u, p, gb, caps);

    // (a) at least two members. Monotone: found two -> Yes forever.
    if (fu.members.size() >= 2)
        out.cond_two_members = Tri::Yes;
    else if (fu.complete)
        out.cond_two_members = Tri::No;

    // (b) isolation in the gamma graph of F_u. An edge found against the
    // conclusively-below subideal disproves isolation even when the picture
    // is otherwise incomplete; proving isolation needs the complete fiber and
    // fully resolved comparisons, except when the subideal is zero.
    BelowResult below = strictly_below_generators(u, p, gb, caps);
    out.unresolved_generators = below.unresolved;
    if (below.strict.empty() && below.unresolved.empty()) {
        out.cond_isolated = Tri::Yes;
    } else {
        bool edge_at_u = false;
        if (!below.strict.empty()) {
            IdealPresentation sub = subideal_from(p, below.strict);
            ReducedGroebnerBasis sub_gb = buchberger(sub, gb.order);
            auto nu = normal_form(u, sub_gb);
            for (const auto& [m, c] : fu.members) {
                if (m == u) continue;
                auto nm = normal_form(m, sub_gb);
                bool same = (!nu && !nm) ||
                            (nu && nm && nu->expo == nm->expo);
                if (same) {
                    edge_at_u = true;
                    break;
                }
            }
        }
        if (edge_at_u)
            out.cond_isolated = Tri::No;
        else if (fu.complete && below.unresolved.empty())
            out.cond_isolated = Tri::Yes;
    }

    // (c) no proper divisor of x^u in an equivalent fiber.
    Natural box = 1;
    for (std::size_t i = 0; i < u.arity(); ++i) box *= u[i] + 1;
    if (box > caps.node_cap) {
        out.cond_divisors = Tri::Unknown;
    } else {
        Tri result = Tri::Yes;
        ExponentVector d(u.arity());
        // Odometer over the divisor box.
        for (;;) {
            if (d != u) {
                Tri eq = fiber_equiv(d, u, p, gb, caps);
                if (eq == Tri::Yes) {
                    result = Tri::No;
                    break;
                }
                if (eq == Tri::Unknown) result = Tri::Unknown;
            }
            std::size_t i = 0;
            while (i < u.arity() && d[i] == u[i]) d[i++] = 0;
            if (i == u.arity()) break;
            d[i] += 1;
        }
        out.cond_divisors = result;
    }

    if (out.cond_two_members == Tri::Yes && out.cond_isolated == Tri::Yes &&
        out.cond_divisors == Tri::Yes)
        out.verdict = Tri::Yes;
    else if (out.cond_two_members == Tri::No || out.cond_isolated == Tri::No ||
             out.cond_divisors == Tri::No)
        out.verdict = Tri::No;

    if (out.verdict == Tri::Yes && !out.support_route)
        throw internal_error(
            "fiber conditions report indispensable but the support route disagrees");
    if (out.verdict == Tri::No && out.support_route)
        throw internal_error(
            "support route reports indispensable but the fiber conditions disagree");
    return out;
}

}  // namespace bideal
