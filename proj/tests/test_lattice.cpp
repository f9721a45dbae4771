#include <random>
#include <set>

#include "doctest.h"
#include "weylell/lattice.hpp"

using namespace weylell;

namespace {

Rational value_of(const RatMatrix& q, const IntVector& z) {
  const RatVector zr = z.cast<Rational>();
  return zr.dot(q * zr);
}

// every integer vector in [-r, r]^n with q(z) <= bound
std::set<IntVector, LexLess> brute_force(const RatMatrix& q, const Rational& bound, std::int64_t r, bool nonneg) {
  std::set<IntVector, LexLess> out;
  const auto n = q.rows();
  IntVector z = IntVector::Constant(n, nonneg ? 0 : -r);
  for (;;) {
    if (value_of(q, z) <= bound) out.insert(z);
    Eigen::Index i = 0;
    while (i < n && z(i) == r) z(i++) = nonneg ? 0 : -r;
    if (i == n) return out;
    ++z(i);
  }
}

}  // namespace

TEST_CASE("enumeration matches brute force inside the ellipsoid") {
  RatMatrix q(3, 3);
  q << 2, -1, 0, -1, 2, -1, 0, -1, 2;
  q /= Rational(4);
  const Rational bound(5, 2);
  for (bool nonneg : {false, true}) {
    CAPTURE(nonneg);
    std::set<IntVector, LexLess> found;
    LatticeEnumerator e(q, bound, {nonneg, 1});
    e.for_each([&](const IntVector& z, const Rational& v) {
      CHECK(v == value_of(q, z));
      found.insert(z);
    });
    CHECK(found == brute_force(q, bound, 8, nonneg));
    CHECK(e.nodes_visited() >= found.size());
  }
}

TEST_CASE("level sets are sorted and independent of the thread count") {
  RatMatrix q(4, 4);
  q << 4, 1, 0, -1, 1, 3, 1, 0, 0, 1, 2, 0, -1, 0, 0, 5;
  const Rational level(12);
  const auto serial = LatticeEnumerator(q, level, {false, 1}).on_level(level);
  const auto parallel = LatticeEnumerator(q, level, {false, 3}).on_level(level);
  CHECK(serial == parallel);
  CHECK(std::is_sorted(serial.begin(), serial.end(), LexLess{}));
  std::set<IntVector, LexLess> expected;
  for (const auto& z : brute_force(q, level, 4, false)) {
    if (value_of(q, z) == level) expected.insert(z);
  }
  CHECK(std::vector<IntVector>(expected.begin(), expected.end()) == serial);
}

TEST_CASE("random positive definite forms") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix b(3, 3);
    for (auto& c : b.reshaped()) c = entry(rng);
    IntMatrix g = b.transpose() * b + IntMatrix::Identity(3, 3);
    const RatMatrix q = g.cast<Rational>();
    const Rational bound(6);
    std::set<IntVector, LexLess> found;
    LatticeEnumerator(q, bound, {false, 1}).for_each([&](const IntVector& z, const Rational&) { found.insert(z); });
    CHECK(found == brute_force(q, bound, 6, false));
  }
}

TEST_CASE("rejects malformed input") {
  RatMatrix q(2, 3);
  q.setZero();
  CHECK_THROWS_AS(LatticeEnumerator(q, Rational(1), {}), Error);
}
