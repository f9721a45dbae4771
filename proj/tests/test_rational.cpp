#include <limits>

#include "doctest.h"
#include "weylell/exact_linalg.hpp"
#include "weylell/rational.hpp"
#include "weylell/types.hpp"

using namespace weylell;

TEST_CASE("rational normalizes sign and gcd") {
  const Rational q(6, -4);
  CHECK(q.num() == -3);
  CHECK(q.den() == 2);
  CHECK(q.str() == "-3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(0, -7) == Rational(0));
}

TEST_CASE("rational arithmetic and ordering") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(b < a);
  CHECK(-a < b);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(7, 2).floor() == 3);
}

TEST_CASE("rational errors") {
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  try {
    (void)Rational(3, 2).to_integer();
    FAIL("expected NotIntegral");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIntegral);
  }
  const Rational big(std::numeric_limits<std::int64_t>::max());
  try {
    (void)(big + big);
    FAIL("expected Overflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Overflow);
  }
}

TEST_CASE("integer square roots") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(15) == 3);
  CHECK(isqrt(16) == 4);
  CHECK(isqrt(std::numeric_limits<std::int64_t>::max()) == 3037000499);
  CHECK(floor_sqrt(Rational(9, 4)) == 1);
  CHECK(floor_sqrt(Rational(10, 1)) == 3);
  CHECK(floor_sqrt(Rational(1, 5)) == 0);
}

TEST_CASE("exact inverse, determinant and LDL") {
  RatMatrix m(2, 2);
  m << 2, -1, -2, 2;
  CHECK(exact_determinant(m) == Rational(2));
  const RatMatrix inv = exact_inverse(m);
  CHECK(inv(0, 0) == Rational(1));
  CHECK(inv(0, 1) == Rational(1, 2));
  CHECK(inv(1, 1) == Rational(1));
  CHECK(RatMatrix(m * inv) == RatMatrix::Identity(2, 2));

  RatMatrix q(2, 2);
  q << 2, -1, -1, 2;
  const LdlFactor f = ldl_upper(q);
  for (Eigen::Index i = 0; i < 2; ++i) CHECK(f.d(i) > Rational(0));

  RatMatrix singular(2, 2);
  singular << 1, 2, 2, 4;
  CHECK(exact_determinant(singular) == Rational(0));
  CHECK_THROWS_AS(exact_inverse(singular), Error);
}

TEST_CASE("vector helpers") {
  CHECK(format(make_vector({1, -2, 3})) == "(1,-2,3)");
  CHECK(join(make_vector({1, 2}), ";") == "1;2");
  CHECK(parse_vector("1, -2,3") == make_vector({1, -2, 3}));
  CHECK(parse_vector("").size() == 0);
  CHECK_THROWS_AS(parse_vector("1,x"), Error);
  CHECK(LexLess{}(make_vector({0, 5}), make_vector({1, 0})));
  CHECK(componentwise_le(make_vector({0, 1}), make_vector({1, 1})));
  CHECK_FALSE(componentwise_le(make_vector({2, 0}), make_vector({1, 1})));
}
