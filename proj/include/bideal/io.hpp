#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bideal/core.hpp"
#include "bideal/toric_types.hpp"

namespace bideal {

// Ideal file grammar
// ------------------
//   # comment to end of line, blank lines ignored
//   field Q            or   field GF <p>
//   vars <name> <name> ...
//   <term>                      (monomial generator)
//   <term> SIGN <term>          (binomial generator, SIGN is + or -)
// with
//   term     := coeff [* monomial] | monomial
//   coeff    := integer [/ positive-integer]
//   monomial := factor (* factor)*
//   factor   := var [^ positive-integer]
// and the literal 1 denoting x^0. Variable names start with a letter or
// underscore and may continue with letters, digits, underscores or primes.

// Parses a complete ideal file. `char_override` replaces the field line's
// characteristic before coefficients are interpreted.
IdealPresentation parse_ideal(const std::string& text,
                              std::optional<unsigned long> char_override = {});
IdealPresentation parse_ideal_file(const std::string& path,
                                   std::optional<unsigned long> char_override = {});

// Canonical serialization; parse(serialize(p)) == p.
std::string serialize_ideal(const IdealPresentation& p);

// Single expression in the term grammar against an existing variable context:
// either "m" or "m SIGN m".
BinomialElement parse_element(const std::string& text, const IdealPresentation& ctx);
ExponentVector parse_monomial(const std::string& text, const IdealPresentation& ctx);

// "x^6*y", "1"; never implicit multiplication.
std::string monomial_str(const ExponentVector& e, const std::vector<std::string>& vars);
// Prints the normalized element, monic lead first: "x^8 - x^6*y",
// "y^6 - 1/9*y^4", "x^2*y", "0".
std::string element_str(const BinomialElement& b, const std::vector<std::string>& vars);
// A term with an explicit scalar, e.g. normal forms: "1/9*y^4".
std::string term_str(const Term& t, const std::vector<std::string>& vars);

// Matrix file: first non-comment line "rows cols", then rows*cols integers in
// row-major order, whitespace separated, '#' comments allowed.
IntegerMatrix parse_matrix(const std::string& text);
IntegerMatrix parse_matrix_file(const std::string& path);
std::string serialize_matrix(const IntegerMatrix& m);

std::string read_file(const std::string& path);  // usage_error if unreadable

}  // namespace bideal
