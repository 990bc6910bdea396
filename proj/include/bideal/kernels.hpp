#pragma once

#include <functional>
#include <vector>

#include "bideal/core.hpp"
#include "bideal/groebner.hpp"

namespace bideal {

// The data-parallel kernels. Each has a serial reference path (the exact
// same per-element function run in a plain loop) selected by
// ExecutionPolicy::Serial; tests assert bit-identical outputs and the
// benchmark target compares wall times.

// Evaluates `pred(i)` for i in [0, n). Parallel over i.
std::vector<char> parallel_mark(std::size_t n,
                                const std::function<bool(std::size_t)>& pred,
                                ExecutionPolicy policy);

// minimal_monomials and batch_normal_forms are declared next to their types
// (core.hpp / groebner.hpp) and implemented here on top of parallel_mark.

}  // namespace bideal
