#pragma once

#include "polyinc/multipoly.hpp"

#include <vector>

namespace polyinc {

/// Square matrix of polynomials sharing one arity, row-major.
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Division-free determinant by expansion over row subsets (memoized
/// minors along the columns). Exponential in the size; meant for n <= 12.
MultiPoly determinant_expansion(const PolyMatrix& m);

/// Fraction-free (Bareiss) determinant with exact multivariate division.
MultiPoly determinant_bareiss(const PolyMatrix& m);

/// Picks the expansion route for small matrices and Bareiss otherwise.
MultiPoly determinant(const PolyMatrix& m);

/// Determinant of the Sylvester matrix of f and g, given as coefficient
/// lists in the eliminated variable (lowest power first). The formal degrees
/// are size()-1 each, so vanishing leading coefficients are kept: the result
/// is the resultant of the homogenized forms.
/// Throws std::invalid_argument if either input is identically zero or has
/// formal degree < 1.
MultiPoly sylvester_resultant(const std::vector<MultiPoly>& f, const std::vector<MultiPoly>& g);

/// True iff p and q share a non-constant factor, decided through the
/// resultant in each variable occurring in both. A zero q shares p itself.
/// Precondition: p nonzero.
bool has_common_factor(const MultiPoly& p, const MultiPoly& q);

}  // namespace polyinc
