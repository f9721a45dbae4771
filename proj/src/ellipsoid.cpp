#include "weylell/ellipsoid.hpp"

#include <sstream>

namespace weylell {

namespace {

void append_term(std::ostringstream& os, bool& first, std::int64_t coeff, const std::string& monomial) {
  if (coeff == 0) return;
  const std::int64_t mag = coeff < 0 ? -coeff : coeff;
  if (first) {
    if (coeff < 0) os << "-";
  } else {
    os << (coeff < 0 ? " - " : " + ");
  }
  if (monomial.empty()) {
    os << mag;
  } else {
    if (mag != 1) os << mag << '*';
    os << monomial;
  }
  first = false;
}

}  // namespace

std::string QuadForm::equation(char var) const {
  std::ostringstream os;
  bool first = true;
  auto name = [var](Eigen::Index i) { return std::string(1, var) + std::to_string(i + 1); };
  for (Eigen::Index i = 0; i < dim(); ++i) append_term(os, first, square_coefficient(i), name(i) + "^2");
  for (Eigen::Index i = 0; i < dim(); ++i) {
    for (Eigen::Index j = i + 1; j < dim(); ++j) {
      append_term(os, first, cross_coefficient(i, j), name(i) + "*" + name(j));
    }
  }
  for (Eigen::Index i = 0; i < dim(); ++i) append_term(os, first, linear(i), name(i));
  append_term(os, first, constant, "");
  if (first) os << "0";
  os << " = 0";
  return os.str();
}

QuadForm primary_form(const CartanData& cd) {
  QuadForm q;
  q.hessian = IntMatrix::Zero(cd.n, cd.n);
  for (int i = 0; i < cd.n; ++i) {
    q.hessian(i, i) = 2 * cd.weights(i);
    for (int j = 0; j < cd.n; ++j) {
      if (i != j) q.hessian(i, j) = -cd.links(i, j);
    }
  }
  q.linear = -cd.weights;
  q.constant = 0;
  return q;
}

QuadForm secondary_form(const CartanData& cd) {
  // M = diag(k) A^-1 is symmetric; det A * M is the (integral) scaled form matrix.
  const RatMatrix m = cd.weights.cast<Rational>().asDiagonal() * cd.inverse;
  const IntMatrix scaled = [&] {
    IntMatrix s(cd.n, cd.n);
    for (int i = 0; i < cd.n; ++i) {
      for (int j = 0; j < cd.n; ++j) s(i, j) = (Rational(cd.det) * m(i, j)).to_integer();
    }
    return s;
  }();
  QuadForm q;
  q.hessian = 2 * scaled;
  q.linear = IntVector::Zero(cd.n);
  q.constant = -scaled.sum();
  return q;
}

IntVector h_vector(const IntVector& x, const CartanData& cd) {
  if (x.size() != cd.n) throw Error(ErrorCode::DimensionMismatch, "point of wrong length");
  return ones(cd.n) - cd.cartan * x;
}

bool on_primary(const IntVector& x, const CartanData& cd) {
  return x.size() == cd.n && primary_form(cd).value(x) == 0;
}

bool on_secondary(const IntVector& h, const CartanData& cd) {
  return h.size() == cd.n && secondary_form(cd).value(h) == 0;
}

IntVector apply_T(int i, const IntVector& x, const CartanData& cd) {
  if (i < 0 || i >= cd.n) throw Error(ErrorCode::IndexOutOfRange, "T index " + std::to_string(i + 1));
  if (!on_primary(x, cd)) throw Error(ErrorCode::NotOnEllipsoid, format(x));
  IntVector y = x;
  y(i) += 1 - cd.cartan.row(i).dot(x);
  return y;
}

Rational secondary_inner_product(const RatVector& h, const CartanData& cd) {
  const RatVector one = RatVector::Ones(cd.n);
  const RatVector u = cd.inverse * RatVector(one - h);
  const RatVector v = cd.inverse * RatVector(one + h);
  return bilinear(u, v, cd);
}

}  // namespace weylell
