// Wall-time comparison of the serial reference kernels against the
// OpenMP-parallel ones, plus the Graver sweep under both policies.
// On a single-core host the interesting output is parity, not speedup.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "bideal/core.hpp"
#include "bideal/graver.hpp"
#include "bideal/groebner.hpp"
#include "bideal/io.hpp"

using namespace bideal;
using clock_t_ = std::chrono::steady_clock;

static double time_ms(const std::function<void()>& f, int reps) {
    auto t0 = clock_t_::now();
    for (int i = 0; i < reps; ++i) f();
    auto t1 = clock_t_::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

static IdealPresentation sample_ideal() {
    return parse_ideal(
        "field Q\nvars x y\n"
        "y^8 - x*y^6\nx^2*y^5 - x^3*y^3\nx^3*y^3 - x^5*y^2\nx^6*y - x^8\n");
}

int main() {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<unsigned long> e(0, 12);

    std::vector<ExponentVector> monos;
    for (int i = 0; i < 20000; ++i)
        monos.push_back(ExponentVector::of({e(rng), e(rng), e(rng), e(rng)}));

    IdealPresentation p = sample_ideal();
    ReducedGroebnerBasis gb = buchberger(p, TermOrder::degrevlex(2));
    std::vector<ExponentVector> nf_batch;
    for (unsigned long a = 0; a <= 40; ++a)
        for (unsigned long b = 0; a + b <= 40; ++b) nf_batch.push_back(ExponentVector::of({a, b}));

    struct Row {
        const char* name;
        double serial_ms, parallel_ms;
    };
    std::vector<Row> rows;

    rows.push_back({"minimal_monomials (20k, 4 vars)",
                    time_ms([&] { minimal_monomials(monos, ExecutionPolicy::Serial); }, 3),
                    time_ms([&] { minimal_monomials(monos, ExecutionPolicy::Parallel); }, 3)});
    rows.push_back({"batch_normal_forms (861 monomials)",
                    time_ms([&] { batch_normal_forms(nf_batch, gb, ExecutionPolicy::Serial); }, 5),
                    time_ms([&] { batch_normal_forms(nf_batch, gb, ExecutionPolicy::Parallel); }, 5)});
    rows.push_back({"graver_basis (two-variable sweep)",
                    time_ms([&] { graver_basis(p, {}, 4, ExecutionPolicy::Serial); }, 1),
                    time_ms([&] { graver_basis(p, {}, 4, ExecutionPolicy::Parallel); }, 1)});

    std::printf("%-36s %12s %12s %8s\n", "kernel", "serial ms", "parallel ms", "ratio");
    for (const auto& r : rows)
        std::printf("%-36s %12.2f %12.2f %8.2f\n", r.name, r.serial_ms, r.parallel_ms,
                    r.serial_ms / (r.parallel_ms > 0 ? r.parallel_ms : 1e-9));
    return 0;
}
