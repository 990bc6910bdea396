#include "bideal/kernels.hpp"

#include <algorithm>

#ifdef BIDEAL_HAVE_OPENMP
#include <omp.h>
#endif

namespace bideal {

ExecutionPolicy default_policy() {
#ifdef BIDEAL_HAVE_OPENMP
    return ExecutionPolicy::Parallel;
#else
    return ExecutionPolicy::Serial;
#endif
}

std::vector<char> parallel_mark(std::size_t n,
                                const std::function<bool(std::size_t)>& pred,
                                ExecutionPolicy policy) {
    std::vector<char> out(n, 0);
    if (policy == ExecutionPolicy::Parallel) {
#ifdef BIDEAL_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 16)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            out[static_cast<std::size_t>(i)] =
                pred(static_cast<std::size_t>(i)) ? 1 : 0;
        return out;
#endif
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = pred(i) ? 1 : 0;
    return out;
}

std::vector<ExponentVector> minimal_monomials(std::vector<ExponentVector> monomials,
                                              ExecutionPolicy policy) {
    if (monomials.empty()) return monomials;
    std::sort(monomials.begin(), monomials.end(), deg_lex_less);
    monomials.erase(std::unique(monomials.begin(), monomials.end()),
                    monomials.end());
    // After dedup, u is redundant iff some proper divisor of it is present.
    // A proper divisor has strictly smaller total degree, hence sorts
    // strictly earlier, so only indices j < i need scanning. Each element is
    // checked independently.
    std::vector<char> drop = parallel_mark(
        monomials.size(),
        [&](std::size_t i) {
            for (std::size_t j = 0; j < i; ++j)
                if (divides(monomials[j], monomials[i])) return true;
            return false;
        },
        policy);
    std::vector<ExponentVector> out;
    for (std::size_t i = 0; i < monomials.size(); ++i)
        if (!drop[i]) out.push_back(std::move(monomials[i]));
    return out;
}

std::vector<std::optional<Term>> batch_normal_forms(
    const std::vector<ExponentVector>& monomials, const ReducedGroebnerBasis& gb,
    ExecutionPolicy policy) {
    std::vector<std::optional<Term>> out(monomials.size());
    std::vector<char> ignored = parallel_mark(
        monomials.size(),
        [&](std::size_t i) {
            out[i] = normal_form(monomials[i], gb);
            return false;
        },
        policy);
    return out;
}

}  // namespace bideal
