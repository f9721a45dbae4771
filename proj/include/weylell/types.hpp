#ifndef WEYLELL_TYPES_HPP
#define WEYLELL_TYPES_HPP

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "weylell/rational.hpp"

namespace weylell {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Integral points: roots, points of the ellipsoids, realizations of Weyl elements.
using IntVector = Vector<std::int64_t>;
using IntMatrix = Matrix<std::int64_t>;
using RatVector = Vector<Rational>;
using RatMatrix = Matrix<Rational>;

/// Orders and orbit sizes. Checked 64-bit; large enough for every catalog type.
using Count = std::int64_t;

/// Strict lexicographic order; shorter vectors first when lengths differ.
struct LexLess {
  template <typename A, typename B>
  bool operator()(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) < b(i)) return true;
      if (b(i) < a(i)) return false;
    }
    return false;
  }
};

struct VectorEqual {
  bool operator()(const IntVector& a, const IntVector& b) const {
    return a.size() == b.size() && a == b;
  }
};

struct VectorHash {
  std::size_t operator()(const IntVector& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      h ^= static_cast<std::uint64_t>(v(i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Componentwise partial order: a <= b iff a_i <= b_i for all i.
template <typename A, typename B>
bool componentwise_le(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a.size() == b.size() && (a.array() <= b.array()).all();
}

inline IntVector ones(Eigen::Index n) { return IntVector::Ones(n); }

template <typename Scalar>
Vector<Rational> to_rational(const Vector<Scalar>& v) {
  return v.template cast<Rational>();
}

/// Converts a rational vector to integers; throws NotIntegral otherwise.
IntVector to_integral(const RatVector& v);

/// "1,2,3" (the CLI and CSV form).
std::string join(const IntVector& v, std::string_view sep = ",");
/// "(1,2,3)".
std::string format(const IntVector& v);
std::string format(const RatVector& v);
/// Parses "1,2,-3" (whitespace tolerated, empty string gives an empty vector).
IntVector parse_vector(std::string_view text);

inline IntVector make_vector(std::initializer_list<std::int64_t> values) {
  IntVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (auto x : values) v(i++) = x;
  return v;
}

}  // namespace weylell

#endif  // WEYLELL_TYPES_HPP
