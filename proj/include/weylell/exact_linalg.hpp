#ifndef WEYLELL_EXACT_LINALG_HPP
#define WEYLELL_EXACT_LINALG_HPP

#include "weylell/types.hpp"

namespace weylell {

/// Exact Gauss-Jordan inverse. Throws DivisionByZero for singular input.
RatMatrix exact_inverse(const RatMatrix& m);

/// Exact determinant by fraction-carrying elimination.
Rational exact_determinant(const RatMatrix& m);

/// Factorization q(z) = sum_i d_i (z_i + sum_{j>i} mu_ij z_j)^2 of a
/// symmetric positive-definite form. `mu` is strictly upper triangular.
struct LdlFactor {
  RatVector d;
  RatMatrix mu;
};

/// Throws DimensionMismatch unless `q` is symmetric positive definite.
LdlFactor ldl_upper(const RatMatrix& q);

}  // namespace weylell

#endif  // WEYLELL_EXACT_LINALG_HPP
