#include "weylell/exact_linalg.hpp"

#include <utility>

namespace weylell {

RatMatrix exact_inverse(const RatMatrix& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  RatMatrix work = m;
  RatMatrix inv = RatMatrix::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pivot = c;
    while (pivot < n && work(pivot, c) == Rational(0)) ++pivot;
    if (pivot == n) throw Error(ErrorCode::DivisionByZero, "singular matrix");
    if (pivot != c) {
      work.row(c).swap(work.row(pivot));
      inv.row(c).swap(inv.row(pivot));
    }
    const Rational p = work(c, c);
    for (Eigen::Index j = 0; j < n; ++j) {
      work(c, j) /= p;
      inv(c, j) /= p;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || work(r, c) == Rational(0)) continue;
      const Rational f = work(r, c);
      for (Eigen::Index j = 0; j < n; ++j) {
        work(r, j) -= f * work(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Rational exact_determinant(const RatMatrix& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  RatMatrix work = m;
  Rational det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pivot = c;
    while (pivot < n && work(pivot, c) == Rational(0)) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != c) {
      work.row(c).swap(work.row(pivot));
      det = -det;
    }
    det *= work(c, c);
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (work(r, c) == Rational(0)) continue;
      const Rational f = work(r, c) / work(c, c);
      for (Eigen::Index j = c; j < n; ++j) work(r, j) -= f * work(c, j);
    }
  }
  return det;
}

LdlFactor ldl_upper(const RatMatrix& q) {
  const Eigen::Index n = q.rows();
  if (q.cols() != n || q != q.transpose()) {
    throw Error(ErrorCode::DimensionMismatch, "LDL of a non-symmetric matrix");
  }
  LdlFactor f{RatVector::Zero(n), RatMatrix::Zero(n, n)};
  RatMatrix schur = q;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Rational pivot = schur(i, i);
    if (pivot <= Rational(0)) throw Error(ErrorCode::DimensionMismatch, "form is not positive definite");
    f.d(i) = pivot;
    for (Eigen::Index j = i + 1; j < n; ++j) f.mu(i, j) = schur(i, j) / pivot;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      for (Eigen::Index k = i + 1; k < n; ++k) schur(j, k) -= schur(i, j) * schur(i, k) / pivot;
    }
  }
  return f;
}

}  // namespace weylell
