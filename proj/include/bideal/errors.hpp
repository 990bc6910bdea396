#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bideal {

// Base class for everything the library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller handed us something malformed (arity mismatch, non-prime modulus,
// bad flag combination, ...). CLI exit code 1.
struct usage_error : error {
    using error::error;
};

// Input text could not be parsed. Carries a 1-based position. CLI exit code 1.
struct parse_error : error {
    std::size_t line;
    std::size_t column;
    parse_error(const std::string& what, std::size_t line_, std::size_t column_)
        : error(what + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

// An exploration cap prevented a definite answer. CLI exit code 2.
struct inconclusive_error : error {
    using error::error;
};

// A cross-check that must agree disagreed; indicates a bug, not bad input.
// CLI exit code 3.
struct internal_error : error {
    using error::error;
};

// Requested operation is outside the supported fragment (e.g. saturation
// without a strictly positive grading). Treated as a usage error by the CLI.
struct unsupported_error : usage_error {
    using usage_error::usage_error;
};

}  // namespace bideal
