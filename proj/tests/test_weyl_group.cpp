#include <array>
#include <set>

#include "doctest.h"
#include "weylell/diophantine.hpp"
#include "weylell/ellipsoid.hpp"
#include "weylell/weyl_group.hpp"

using namespace weylell;

namespace {

WeylElement longest(const GroupTable& table) {
  std::size_t best = 0;
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (table.length(k) > table.length(best)) best = k;
  }
  return table.element(best);
}

}  // namespace

TEST_CASE("words and matrices") {
  const CartanData b2 = build_cartan("B2");
  CHECK(word_to_element({}, b2).mat == IntMatrix::Identity(2, 2));
  for (int i = 0; i < 2; ++i) {
    const WeylElement s = simple_reflection(i, b2);
    CHECK(compose(s, s).mat == IntMatrix::Identity(2, 2));
  }
  const std::array<int, 4> w0{0, 1, 0, 1};
  const WeylElement w = word_to_element(w0, b2);
  CHECK(w.mat == IntMatrix(-IntMatrix::Identity(2, 2)));
  CHECK(w.word == std::vector<int>(w0.begin(), w0.end()));
  const std::array<int, 1> bad{2};
  CHECK_THROWS_AS(word_to_element(bad, b2), Error);
}

TEST_CASE("P and S maps") {
  const CartanData b2 = build_cartan("B2");
  const WeylElement e = identity_element(b2);
  CHECK(p_map(e, b2) == make_vector({0, 0}));
  CHECK(s_map(e, b2) == make_vector({1, 1}));
  const WeylElement s1 = simple_reflection(0, b2);
  CHECK(p_map(s1, b2) == make_vector({1, 0}));
  CHECK(s_map(s1, b2) == make_vector({-1, 3}));
  const std::array<int, 4> w0{0, 1, 0, 1};
  CHECK(p_map(word_to_element(w0, b2), b2) == make_vector({3, 4}));
  CHECK(s_map(word_to_element(w0, b2), b2) == make_vector({-1, -1}));
  const CartanData a2 = build_cartan("A2");
  const std::array<int, 2> s1s2{0, 1};
  CHECK(p_map(word_to_element(s1s2, a2), a2) == make_vector({2, 1}));
}

TEST_CASE("group tables") {
  const GroupTable a1 = build_group_table(build_cartan("A1"));
  CHECK(a1.size() == 2);
  CHECK(a1.keys() == std::vector<IntVector>{make_vector({0}), make_vector({1})});

  const CartanData a2 = build_cartan("A2");
  const GroupTable t = build_group_table(a2);
  CHECK(t.size() == 6);
  CHECK(t.keys() == expand_orbit(make_vector({0, 0}), a2));
  CHECK(t.length(t.identity()) == 0);
  CHECK(t.length(t.index_of(make_vector({2, 2}))) == 3);
  CHECK_FALSE(t.find(make_vector({3, 3})).has_value());
  try {
    t.index_of(make_vector({3, 3}));
    FAIL("expected NotInMainOrbit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInMainOrbit);
  }
  CHECK(build_group_table(build_cartan("B2")).size() == 8);
  CHECK_THROWS_AS(build_group_table(build_cartan("E8")), Error);
  CHECK_THROWS_AS(build_group_table(build_cartan("A4"), 100), Error);
}

TEST_CASE("multiplication tables agree with matrices") {
  for (const char* t : {"A3", "B3", "G2", "A1xB2"}) {
    const CartanData cd = build_cartan(t);
    const GroupTable table = build_group_table(cd);
    for (std::size_t k = 0; k < table.size(); ++k) {
      const WeylElement& w = table.element(k);
      CHECK(word_to_element(w.word, cd).mat == w.mat);
      CHECK(p_map(w, cd) == table.p_vector(k));
      CHECK(s_map(w, cd) == h_vector(table.p_vector(k), cd));
      CHECK(IntMatrix(w.mat.transpose() * cd.gram.cast<std::int64_t>() * w.mat) == cd.gram.cast<std::int64_t>());
      for (int i = 0; i < cd.n; ++i) {
        const WeylElement s = simple_reflection(i, cd);
        CHECK(table.element(table.right_multiply(k, i)).mat == IntMatrix(w.mat * s.mat));
        CHECK(table.element(table.left_multiply(k, i)).mat == IntMatrix(s.mat * w.mat));
        CHECK(table.p_vector(table.left_multiply(k, i)) == apply_T(i, table.p_vector(k), cd));
      }
    }
  }
}

TEST_CASE("star") {
  const CartanData a2 = build_cartan("A2");
  const GroupTable t = build_group_table(a2);
  for (const auto& b : t.keys()) CHECK(star(make_vector({0, 0}), b, t) == b);
  CHECK(star(make_vector({1, 0}), make_vector({1, 0}), t) == make_vector({0, 0}));
  CHECK(star(make_vector({1, 0}), make_vector({0, 1}), t) == make_vector({2, 1}));
  CHECK_THROWS_AS(star(make_vector({3, 3}), make_vector({0, 0}), t), Error);

  const GroupTable b3 = build_group_table(build_cartan("B3"));
  for (const auto& a : b3.keys()) {
    bool has_inverse = false;
    for (const auto& b : b3.keys()) {
      if (star(a, b, b3) == IntVector::Zero(3)) has_inverse = true;
    }
    CHECK(has_inverse);
  }
  for (std::size_t x = 0; x < b3.size(); x += 5) {
    for (std::size_t y = 0; y < b3.size(); y += 3) {
      for (std::size_t z = 0; z < b3.size(); z += 7) {
        const auto& a = b3.p_vector(x);
        const auto& b = b3.p_vector(y);
        const auto& c = b3.p_vector(z);
        CHECK(star(star(a, b, b3), c, b3) == star(a, star(b, c, b3), b3));
      }
    }
  }
}

TEST_CASE("p_alpha_b") {
  const CartanData a2 = build_cartan("A2");
  const GroupTable t = build_group_table(a2);
  CHECK(p_alpha_b(make_vector({1, 0}), make_vector({0, 1}), t) == 2);
  CHECK(p_alpha_b(make_vector({1, 1}), make_vector({2, 2}), t) == -2);
  for (const Root& r : a2.roots) CHECK(p_alpha_b(r.coords, make_vector({0, 0}), t) == r.grade);
  CHECK_THROWS_AS(p_alpha_b(make_vector({1, -1}), make_vector({0, 0}), t), Error);
}

TEST_CASE("longest element sends delta to -delta where -1 is in W") {
  for (const char* t : {"B2", "B3", "D4", "G2", "F4"}) {
    const CartanData cd = build_cartan(t);
    const GroupTable table = build_group_table(cd);
    const WeylElement w0 = longest(table);
    CHECK(w0.word.size() == cd.roots.size());
    CHECK(s_map(w0, cd) == IntVector(-ones(cd.n)));
  }
}
