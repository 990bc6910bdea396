#include "bideal/toric.hpp"

#include <algorithm>

#include "bideal/groebner.hpp"

namespace bideal {

std::vector<IntVector> kernel_lattice_basis(const IntegerMatrix& a) {
    const std::size_t m = a.rows, n = a.cols;
    // W starts as A and receives column operations; U tracks them so that
    // A * U == W throughout. All operations are unimodular, so the U-columns
    // over zero W-columns form a lattice basis of ker_Z(A).
    IntegerMatrix w = a;
    IntegerMatrix u(n, n);
    for (std::size_t i = 0; i < n; ++i) u.at(i, i) = 1;

    std::vector<bool> pivot_col(n, false);

    auto add_col = [&](IntegerMatrix& mat, std::size_t dst, std::size_t src,
                       const Integer& factor) {
        for (std::size_t r = 0; r < mat.rows; ++r)
            mat.at(r, dst) += factor * mat.at(r, src);
    };

    for (std::size_t row = 0; row < m; ++row) {
        // Euclidean elimination across the still-active columns of this row.
        for (;;) {
            std::size_t best = n;
            for (std::size_t c = 0; c < n; ++c) {
                if (pivot_col[c] || w.at(row, c) == 0) continue;
                if (best == n || abs(w.at(row, c)) < abs(w.at(row, best))) best = c;
            }
            if (best == n) break;  // row already zero on active columns
            bool reduced_all = true;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == best || pivot_col[c] || w.at(row, c) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), w.at(row, c).get_mpz_t(),
                           w.at(row, best).get_mpz_t());
                add_col(w, c, best, -q);
                add_col(u, c, best, -q);
                if (w.at(row, c) != 0) reduced_all = false;
            }
            if (reduced_all) {
                pivot_col[best] = true;
                break;
            }
        }
    }

    std::vector<IntVector> basis;
    for (std::size_t c = 0; c < n; ++c) {
        if (pivot_col[c]) continue;
        bool zero = true;
        for (std::size_t r = 0; r < m && zero; ++r)
            if (w.at(r, c) != 0) zero = false;
        if (!zero)
            throw internal_error("column reduction left a non-pivot, non-kernel column");
        IntVector v(n);
        bool nonzero = false;
        for (std::size_t r = 0; r < n; ++r) {
            v[r] = u.at(r, c);
            if (v[r] != 0) nonzero = true;
        }
        if (!nonzero) throw internal_error("zero column in unimodular transform");
        // Deterministic sign: first nonzero entry positive.
        for (std::size_t r = 0; r < n; ++r) {
            if (v[r] == 0) continue;
            if (v[r] < 0)
                for (auto& x : v) x = -x;
            break;
        }
        basis.push_back(std::move(v));
    }
    // Verify A v == 0 for every basis vector.
    for (const auto& v : basis)
        for (std::size_t r = 0; r < m; ++r) {
            Integer s = 0;
            for (std::size_t c = 0; c < n; ++c) s += a.at(r, c) * v[c];
            if (s != 0) throw internal_error("kernel basis vector fails A v = 0");
        }
    std::sort(basis.begin(), basis.end());
    return basis;
}

IdealPresentation lattice_basis_ideal(const std::vector<IntVector>& basis,
                                      std::vector<std::string> vars,
                                      unsigned long characteristic) {
    std::size_t n = vars.size();
    for (const auto& v : basis)
        if (v.size() != n)
            throw usage_error("lattice vector arity does not match variable count");
    std::vector<BinomialElement> gens;
    TermOrder ambient = TermOrder::degrevlex(n);
    Scalar one = Scalar::one(characteristic);
    for (const auto& v : basis) {
        if (is_zero(v)) continue;
        gens.push_back(
            normalize(one, positive_part(v), -one, negative_part(v), ambient));
    }
    return make_presentation(characteristic, std::move(vars), gens);
}

// ---------------------------------------------------------------------------
// Exact rational LP feasibility for strictly positive gradings.

namespace {

// Phase-1 simplex with Bland's rule on: minimize sum(artificials) subject to
// G l+ - G l- - s + art = 1 (componentwise), all variables >= 0. Feasible
// (optimum 0) iff some l solves G l >= 1.
std::optional<std::vector<mpq_class>> positive_combination(
    const std::vector<IntVector>& gcols, std::size_t n) {
    const std::size_t k = gcols.size();
    if (n == 0) return std::vector<mpq_class>{};
    const std::size_t vars = 2 * k + n + n;  // l+, l-, slack, artificial
    const std::size_t art0 = 2 * k + n;

    // tableau rows: n constraints; columns: vars + rhs
    std::vector<std::vector<mpq_class>> t(n, std::vector<mpq_class>(vars + 1, 0));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            t[r][c] = gcols[c][r];
            t[r][k + c] = -gcols[c][r];
        }
        t[r][2 * k + r] = -1;      // slack
        t[r][art0 + r] = 1;        // artificial
        t[r][vars] = 1;            // rhs
    }
    std::vector<std::size_t> basis(n);
    for (std::size_t r = 0; r < n; ++r) basis[r] = art0 + r;

    // Reduced cost of column c for cost vector "1 on artificials, 0 else";
    // recomputed from the tableau each round (n and vars are tiny here, and
    // this sidesteps incremental-update bookkeeping).
    auto reduced_cost = [&](std::size_t c) {
        mpq_class rc = c >= art0 ? 1 : 0;
        for (std::size_t r = 0; r < n; ++r)
            if (basis[r] >= art0) rc -= t[r][c];
        return rc;
    };

    for (;;) {
        // Bland: smallest index with negative reduced cost.
        std::size_t enter = vars;
        for (std::size_t c = 0; c < vars; ++c)
            if (reduced_cost(c) < 0) {
                enter = c;
                break;
            }
        if (enter == vars) break;
        // Ratio test, Bland tie-break by smallest basis variable.
        std::size_t leave = n;
        mpq_class best_ratio;
        for (std::size_t r = 0; r < n; ++r) {
            if (t[r][enter] <= 0) continue;
            mpq_class ratio = t[r][vars] / t[r][enter];
            if (leave == n || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == n) return std::nullopt;  // unbounded; cannot happen here
        // Pivot.
        mpq_class piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            mpq_class f = t[r][enter];
            for (std::size_t c = 0; c <= vars; ++c) t[r][c] -= f * t[leave][c];
        }
        basis[leave] = enter;
    }
    mpq_class objval = 0;
    for (std::size_t r = 0; r < n; ++r)
        if (basis[r] >= art0) objval += t[r][vars];
    if (objval != 0) return std::nullopt;  // infeasible

    std::vector<mpq_class> l(k, 0);
    for (std::size_t r = 0; r < n; ++r) {
        if (basis[r] < k)
            l[basis[r]] += t[r][vars];
        else if (basis[r] < 2 * k)
            l[basis[r] - k] -= t[r][vars];
    }
    return l;
}

}  // namespace

std::optional<IntVector> positive_grading_for_moves(
    const std::vector<IntVector>& moves, std::size_t arity) {
    if (arity == 0) return IntVector{};
    // The grading must lie in the rational kernel of the move matrix; compute
    // an integer basis of that kernel (moves as rows).
    std::vector<IntVector> nonzero;
    for (const auto& m : moves) {
        if (m.size() != arity) throw usage_error("move arity mismatch");
        if (!is_zero(m)) nonzero.push_back(m);
    }
    std::vector<IntVector> cols;
    if (nonzero.empty()) {
        // Unconstrained: the all-ones grading works.
        IntVector ones(arity, 1);
        return ones;
    }
    IntegerMatrix mm(nonzero.size(), arity);
    for (std::size_t r = 0; r < nonzero.size(); ++r)
        for (std::size_t c = 0; c < arity; ++c) mm.at(r, c) = nonzero[r][c];
    cols = kernel_lattice_basis(mm);
    if (cols.empty()) return std::nullopt;

    auto l = positive_combination(cols, arity);
    if (!l) return std::nullopt;

    // g = sum l_c * cols[c], strictly positive by construction (>= 1); clear
    // denominators.
    std::vector<mpq_class> g(arity, 0);
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < arity; ++r) g[r] += (*l)[c] * cols[c][r];
    Integer denom_lcm = 1;
    for (const auto& x : g) {
        Integer d = x.get_den();
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), d.get_mpz_t());
    }
    IntVector out(arity);
    for (std::size_t r = 0; r < arity; ++r) {
        mpq_class scaled = g[r] * denom_lcm;
        out[r] = scaled.get_num();
        if (out[r] <= 0) throw internal_error("grading not strictly positive");
    }
    // Verify orthogonality exactly.
    for (const auto& m : nonzero) {
        Integer s = 0;
        for (std::size_t r = 0; r < arity; ++r) s += m[r] * out[r];
        if (s != 0) throw internal_error("grading not orthogonal to a move");
    }
    return out;
}

std::optional<IntVector> positive_grading(const IdealPresentation& p) {
    return positive_grading_for_moves(generator_moves(p), p.arity());
}

namespace {

IdealPresentation saturate_variable_graded(const IdealPresentation& p,
                                           std::size_t var, const IntVector& g) {
    std::vector<Natural> weights(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) weights[i] = g[i];
    TermOrder order = TermOrder::weighted_revlex(weights, var);
    ReducedGroebnerBasis gb = buchberger(p, order);
    // Under this order, for g-homogeneous f the variable divides f exactly
    // when it divides the lead term, so stripping the common power from each
    // basis element yields a basis of the saturation.
    std::vector<BinomialElement> gens;
    for (const auto& e : gb.elements) {
        if (e.is_monomial()) {
            ExponentVector m = e.lead();
            m[var] = 0;
            gens.push_back(BinomialElement::monomial(std::move(m)));
            continue;
        }
        Natural common = e.lead()[var] <= e.trail()[var] ? e.lead()[var]
                                                         : e.trail()[var];
        ExponentVector le = e.lead(), tr = e.trail();
        le[var] -= common;
        tr[var] -= common;
        gens.push_back(normalize(Scalar::one(p.characteristic), le, e.trail_coeff(),
                                 tr, TermOrder::degrevlex(p.arity())));
    }
    return make_presentation(p.characteristic, p.vars, gens);
}

IntVector require_grading(const IdealPresentation& p) {
    auto g = positive_grading(p);
    if (!g)
        throw unsupported_error(
            "saturation requires a strictly positive grading; none exists for "
            "this presentation (supply an externally computed generating set "
            "instead)");
    return *g;
}

}  // namespace

IdealPresentation saturate_variable(const IdealPresentation& p, std::size_t var) {
    if (var >= p.arity()) throw usage_error("variable index out of range");
    if (p.generators.empty()) return p;
    return saturate_variable_graded(p, var, require_grading(p));
}

IdealPresentation saturate_all(const IdealPresentation& p) {
    if (p.generators.empty()) return p;
    IntVector g = require_grading(p);
    IdealPresentation cur = p;
    // One sequential pass suffices: ((I : x1^oo) : x2^oo) ... : xn^oo equals
    // (I : (x1...xn)^oo).
    for (std::size_t v = 0; v < p.arity(); ++v)
        cur = saturate_variable_graded(cur, v, g);
    return cur;
}

IdealPresentation toric_ideal(const IntegerMatrix& a, std::vector<std::string> vars) {
    if (vars.empty()) vars = default_var_names(a.cols);
    if (vars.size() != a.cols)
        throw usage_error("variable count does not match matrix columns");
    std::vector<IntVector> kernel = kernel_lattice_basis(a);
    IdealPresentation basis_ideal = lattice_basis_ideal(kernel, std::move(vars));
    if (basis_ideal.generators.empty()) return basis_ideal;  // zero ideal
    IdealPresentation sat = saturate_all(basis_ideal);
    // Every generator's move must stay in ker(A).
    for (const auto& gen : sat.generators) {
        if (!gen.is_binomial())
            throw internal_error("toric saturation produced a monomial");
        IntVector mv = gen.move();
        for (std::size_t r = 0; r < a.rows; ++r) {
            Integer s = 0;
            for (std::size_t c = 0; c < a.cols; ++c) s += a.at(r, c) * mv[c];
            if (s != 0)
                throw internal_error("toric generator move leaves the kernel");
        }
    }
    return sat;
}

std::optional<bool> is_lattice_ideal(const IdealPresentation& p) {
    if (!positive_grading(p)) return std::nullopt;
    IdealPresentation sat = saturate_all(p);
    return ideal_equal(sat, p, TermOrder::degrevlex(p.arity()));
}

IntegerMatrix a333_matrix() {
    IntegerMatrix a(27, 27);
    auto cell = [](std::size_t i, std::size_t j, std::size_t k) {
        return 9 * (i - 1) + 3 * (j - 1) + (k - 1);
    };
    std::size_t row = 0;
    for (std::size_t i = 1; i <= 3; ++i)  // ij-margins
        for (std::size_t j = 1; j <= 3; ++j, ++row)
            for (std::size_t k = 1; k <= 3; ++k) a.at(row, cell(i, j, k)) = 1;
    for (std::size_t i = 1; i <= 3; ++i)  // ik-margins
        for (std::size_t k = 1; k <= 3; ++k, ++row)
            for (std::size_t j = 1; j <= 3; ++j) a.at(row, cell(i, j, k)) = 1;
    for (std::size_t j = 1; j <= 3; ++j)  // jk-margins
        for (std::size_t k = 1; k <= 3; ++k, ++row)
            for (std::size_t i = 1; i <= 3; ++i) a.at(row, cell(i, j, k)) = 1;
    return a;
}

}  // namespace bideal
