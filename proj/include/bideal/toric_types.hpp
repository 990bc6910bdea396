#pragma once

#include <cstddef>

#include "bideal/core.hpp"

namespace bideal {

// Dense integer matrix with arbitrary-precision entries, row-major.
struct IntegerMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Integer> entries;  // rows * cols

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Integer& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const Integer& at(std::size_t r, std::size_t c) const {
        return entries[r * cols + c];
    }
};

}  // namespace bideal
