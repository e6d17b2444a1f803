#pragma once

#include <vector>

#include "sdg/polynomial.hpp"

namespace sdg {

/// Sylvester matrix of p and q with respect to `var`: deg(q) rows of p's
/// coefficients (descending) above deg(p) rows of q's. Entries do not
/// mention `var`.
std::vector<std::vector<Polynomial>> sylvester_matrix(const Polynomial& p, const Polynomial& q,
                                                      int var);

/// Determinant of the Sylvester matrix, computed by fraction-free Gaussian
/// elimination (Bareiss). Vanishes exactly below the points where p and q
/// share a common root in `var`. Requires positive degree in `var` on both
/// sides.
Polynomial resultant(const Polynomial& p, const Polynomial& q, int var);

/// Determinant of a square polynomial matrix (Bareiss, exact divisions).
Polynomial poly_det(std::vector<std::vector<Polynomial>> m, int nvars);

/// Squarefree part of a polynomial in at most two variables: divides out
/// repeated factors, keeping the leading coefficient's sign.
Polynomial squarefree_part(const Polynomial& p);

} // namespace sdg
