#ifndef WEYLELL_ELLIPSOID_HPP
#define WEYLELL_ELLIPSOID_HPP

#include "weylell/cartan.hpp"

namespace weylell {

/// Integer quadratic polynomial
///
///   value(x) = sum_i (H_ii / 2) x_i^2 + sum_{i<j} H_ij x_i x_j + linear . x + constant
///
/// with H symmetric and its diagonal even, so integer inputs give integer values.
struct QuadForm {
  IntMatrix hessian;
  IntVector linear;
  std::int64_t constant = 0;

  Eigen::Index dim() const { return linear.size(); }

  template <typename Scalar>
  Scalar value(const Vector<Scalar>& x) const {
    if (x.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "quadratic form dimension");
    Scalar acc(constant);
    for (Eigen::Index i = 0; i < dim(); ++i) {
      if (x(i) == Scalar(0)) continue;
      acc += Scalar(hessian(i, i) / 2) * x(i) * x(i) + Scalar(linear(i)) * x(i);
      for (Eigen::Index j = i + 1; j < dim(); ++j) {
        if (hessian(i, j) != 0) acc += Scalar(hessian(i, j)) * x(i) * x(j);
      }
    }
    return acc;
  }

  /// Coefficient of x_i^2 and of x_i x_j (i < j) in the expanded polynomial.
  std::int64_t square_coefficient(Eigen::Index i) const { return hessian(i, i) / 2; }
  std::int64_t cross_coefficient(Eigen::Index i, Eigen::Index j) const { return hessian(i, j); }

  /// The polynomial in the variable `var`, e.g. "x1^2 + x2^2 - x1*x2 - x1 - x2".
  std::string equation(char var = 'x') const;
};

/// sum_i k_i (x_i^2 - x_i) - sum_{i<j} l_ij x_i x_j. Twice this value is <x, x - 2 delta>.
QuadForm primary_form(const CartanData& cd);

/// det A * (sum_i k_i b_ii (h_i^2 - 1) + 2 sum_{i<j} k_i b_ij (h_i h_j - 1)) with
/// b = A^-1. All coefficients are integers.
QuadForm secondary_form(const CartanData& cd);

/// (1,...,1) - A x.
IntVector h_vector(const IntVector& x, const CartanData& cd);

bool on_primary(const IntVector& x, const CartanData& cd);
bool on_secondary(const IntVector& h, const CartanData& cd);

/// T_i: shifts coordinate i (0-based) by h_vector(x)_i; the identity when that
/// component is zero. Throws NotOnEllipsoid, IndexOutOfRange.
IntVector apply_T(int i, const IntVector& x, const CartanData& cd);

/// <A^-1 (1 - h), A^-1 (1 + h)>, evaluated exactly.
Rational secondary_inner_product(const RatVector& h, const CartanData& cd);

}  // namespace weylell

#endif  // WEYLELL_ELLIPSOID_HPP
