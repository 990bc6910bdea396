#pragma once

#include <optional>
#include <vector>

#include "bideal/core.hpp"
#include "bideal/toric_types.hpp"

namespace bideal {

// Basis of the integer kernel {u : Au = 0} as a lattice, via unimodular
// column reduction; the returned vectors generate every integer kernel
// element over Z, not merely over Q.
std::vector<IntVector> kernel_lattice_basis(const IntegerMatrix& a);

// Pure difference binomials x^{u+} - x^{u-} for the given lattice vectors.
IdealPresentation lattice_basis_ideal(const std::vector<IntVector>& basis,
                                      std::vector<std::string> vars,
                                      unsigned long characteristic = 0);

// A strictly positive integer vector g orthogonal to every generator move
// (i.e. the presentation is g-homogeneous), when one exists. Decided exactly
// by rational linear programming.
std::optional<IntVector> positive_grading(const IdealPresentation& p);
std::optional<IntVector> positive_grading_for_moves(
    const std::vector<IntVector>& moves, std::size_t arity);

// (I : x_i^infinity) via the graded division trick: compute a reduced basis
// under a weighted reverse-lex order with x_i least significant, then strip
// the common x_i power from every element. Requires a strictly positive
// grading; throws unsupported_error otherwise.
IdealPresentation saturate_variable(const IdealPresentation& p, std::size_t var);

// (I : (x_1...x_n)^infinity), one pass of saturate_variable over every
// variable. Same grading requirement.
IdealPresentation saturate_all(const IdealPresentation& p);

// Toric ideal of an integer matrix: saturate the lattice basis ideal of
// ker_Z(A) by all variables. Throws unsupported_error when no strictly
// positive grading exists (no positive vector in the row space).
IdealPresentation toric_ideal(const IntegerMatrix& a,
                              std::vector<std::string> vars = {});

// Does the presentation generate a lattice ideal, i.e. I = (I : (x1...xn)^oo)?
// Requires a positive grading; nullopt when that prerequisite fails.
std::optional<bool> is_lattice_ideal(const IdealPresentation& p);

// The 0/1 margin matrix of 3x3x3 contingency tables with all three 2-way
// margins fixed: 27 rows (nine ij-, nine ik-, nine jk-margins), 27 columns
// indexed by cells (i,j,k) as 9(i-1)+3(j-1)+(k-1). Rank 19.
IntegerMatrix a333_matrix();

}  // namespace bideal
