#ifndef WEYLELL_RATIONAL_HPP
#define WEYLELL_RATIONAL_HPP

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "weylell/error.hpp"

namespace weylell {

/// Exact rational number over 64-bit integers.
///
/// Always kept in lowest terms with a positive denominator. Every operation
/// is computed in 128-bit intermediates and throws ErrorCode::Overflow if the
/// reduced result does not fit; results are never silently wrapped.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  /// The integer value; throws NotIntegral when the denominator is not 1.
  std::int64_t to_integer() const;

  std::int64_t floor() const;
  std::int64_t ceil() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Rational abs(const Rational& q);

/// floor(sqrt(q)) for q >= 0, exact.
std::int64_t floor_sqrt(const Rational& q);

/// floor(sqrt(v)) for v >= 0, exact.
std::int64_t isqrt(std::int64_t v);

/// Overflow-checked integer helpers.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace weylell

namespace Eigen {

template <>
struct NumTraits<weylell::Rational> : GenericNumTraits<weylell::Rational> {
  using Real = weylell::Rational;
  using NonInteger = weylell::Rational;
  using Nested = weylell::Rational;
  using Literal = weylell::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 8
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // WEYLELL_RATIONAL_HPP
