#include "weylell/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

namespace weylell {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::BadIndexSet: return "BadIndexSet";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotOnEllipsoid: return "NotOnEllipsoid";
    case ErrorCode::NotASolution: return "NotASolution";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotInMainOrbit: return "NotInMainOrbit";
    case ErrorCode::NotAMultiple: return "NotAMultiple";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

using wide = __int128;

constexpr wide kMax = std::numeric_limits<std::int64_t>::max();
constexpr wide kMin = std::numeric_limits<std::int64_t>::min();

wide wide_abs(wide v) { return v < 0 ? -v : v; }

wide wide_gcd(wide a, wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(wide v) {
  if (v > kMax || v < kMin) throw Error(ErrorCode::Overflow, "rational arithmetic exceeded 64 bits");
  return static_cast<std::int64_t>(v);
}

// floor division for a signed numerator and positive denominator
wide floor_div(wide a, wide b) {
  wide q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = from_wide(num, den);
}

Rational Rational::from_wide(wide num, wide den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num_ = narrow(num);
  r.den_ = narrow(den);
  return r;
}

std::int64_t Rational::to_integer() const {
  if (den_ != 1) throw Error(ErrorCode::NotIntegral, str() + " is not an integer");
  return num_;
}

std::int64_t Rational::floor() const { return narrow(floor_div(num_, den_)); }

std::int64_t Rational::ceil() const { return narrow(-floor_div(-static_cast<wide>(num_), den_)); }

Rational Rational::operator-() const { return from_wide(-static_cast<wide>(num_), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    num_ = narrow(static_cast<wide>(num_) + rhs.num_);
    return *this;
  }
  *this = from_wide(static_cast<wide>(num_) * rhs.den_ + static_cast<wide>(rhs.num_) * den_,
                    static_cast<wide>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    num_ = narrow(static_cast<wide>(num_) * rhs.num_);
    return *this;
  }
  *this = from_wide(static_cast<wide>(num_) * rhs.num_, static_cast<wide>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
  *this = from_wide(static_cast<wide>(num_) * rhs.den_, static_cast<wide>(den_) * rhs.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  wide lhs = static_cast<wide>(a.num_) * b.den_;
  wide rhs = static_cast<wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational abs(const Rational& q) { return q < Rational(0) ? -q : q; }

std::int64_t isqrt(std::int64_t v) {
  if (v < 0) throw Error(ErrorCode::DimensionMismatch, "square root of a negative number");
  // Newton iteration on integers; exact floor.
  if (v < 2) return v;
  wide x = v;
  wide y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + v / x) / 2;
  }
  return static_cast<std::int64_t>(x);
}

std::int64_t floor_sqrt(const Rational& q) {
  // floor(sqrt(p/d)) == floor(sqrt(floor(p/d)))
  return isqrt(q.floor());
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer addition overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer multiplication overflow");
  return r;
}

}  // namespace weylell
