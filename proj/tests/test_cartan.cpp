#include <algorithm>
#include <array>
#include <numeric>

#include "doctest.h"
#include "weylell/cartan.hpp"
#include "weylell/oracles.hpp"

using namespace weylell;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("parse_type") {
  CHECK(parse_type("A1").components == std::vector<TypeComponent>{{Family::A, 1}});
  CHECK(parse_type("B2xG2").components == std::vector<TypeComponent>{{Family::B, 2}, {Family::G, 2}});
  CHECK(parse_type("d4").rank() == 4);
  CHECK(to_string(parse_type("B2xG2")) == "B2xG2");
  CHECK(code_of([] { parse_type("E9"); }) == ErrorCode::RankOutOfRange);
  CHECK(code_of([] { parse_type("D3"); }) == ErrorCode::RankOutOfRange);
  CHECK(code_of([] { parse_type("B1"); }) == ErrorCode::RankOutOfRange);
  CHECK(code_of([] { parse_type("Z3"); }) == ErrorCode::UnknownFamily);
  CHECK(code_of([] { parse_type("A"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_type(""); }) == ErrorCode::Parse);
}

TEST_CASE("rank-two Cartan data") {
  const CartanData a2 = build_cartan("A2");
  CHECK(a2.cartan == (IntMatrix(2, 2) << 2, -1, -1, 2).finished());
  CHECK(a2.weights == make_vector({1, 1}));
  CHECK(format(a2.delta) == "(1,1)");
  CHECK(a2.det == 3);

  const CartanData b2 = build_cartan("B2");
  CHECK(b2.cartan == (IntMatrix(2, 2) << 2, -1, -2, 2).finished());
  CHECK(b2.weights == make_vector({2, 1}));
  CHECK(format(b2.delta) == "(3/2,2)");
  CHECK(b2.det == 2);

  const CartanData g2 = build_cartan("G2");
  CHECK(g2.weights == make_vector({1, 3}));
  CHECK(g2.links(0, 1) == 3);
  CHECK(g2.det == 1);
}

TEST_CASE("positive roots") {
  auto coords = [](const CartanData& cd) {
    std::vector<IntVector> out;
    for (const Root& r : positive_roots(cd)) out.push_back(r.coords);
    return out;
  };
  const auto a2 = coords(build_cartan("A2"));
  CHECK(a2.size() == 3);
  for (const auto& v : {make_vector({1, 0}), make_vector({0, 1}), make_vector({1, 1})}) {
    CHECK(std::find(a2.begin(), a2.end(), v) != a2.end());
  }
  const auto b2 = coords(build_cartan("B2"));
  CHECK(b2.size() == 4);
  CHECK(std::find(b2.begin(), b2.end(), make_vector({1, 2})) != b2.end());
  CHECK(positive_roots(build_cartan("G2")).size() == 6);
  CHECK(positive_roots(build_cartan("E8")).size() == 120);
}

TEST_CASE("grades") {
  const CartanData a2 = build_cartan("A2");
  CHECK(grade(make_vector({1, 1}), a2) == 2);
  CHECK(grade(make_vector({0, 1}), a2) == 1);
  const CartanData b2 = build_cartan("B2");
  CHECK(grade(make_vector({1, 2}), b2) == 2);
  CHECK(code_of([&] { grade(make_vector({2, 1}), b2); }) == ErrorCode::NotARoot);
  CHECK(code_of([&] { grade(make_vector({1}), b2); }) == ErrorCode::DimensionMismatch);
  for (const char* t : {"A4", "B3", "C4", "D5", "E6", "F4", "G2"}) {
    const CartanData cd = build_cartan(t);
    for (const Root& r : cd.roots) {
      const bool simple = r.coords.sum() == 1;
      CHECK((r.grade == 1) == simple);
    }
  }
}

TEST_CASE("invariants against classical constants") {
  for (const char* t : {"A1", "A5", "B2", "B5", "C3", "C6", "D4", "D7", "E6", "E7", "E8", "F4", "G2"}) {
    CAPTURE(t);
    const CartanData cd = build_cartan(t);
    const TypeComponent c = cd.type.components.front();
    CHECK(static_cast<Count>(cd.roots.size()) == oracle::classical_root_count(c));
    CHECK(cd.det == oracle::classical_determinant(c));
    const RatMatrix a = cd.cartan.cast<Rational>();
    CHECK(RatVector(a * cd.delta) == RatVector::Ones(cd.n));
    CHECK(RatMatrix(cd.inverse * a) == RatMatrix::Identity(cd.n, cd.n));
    for (int i = 0; i < cd.n; ++i) {
      for (int j = 0; j < cd.n; ++j) CHECK(cd.weights(i) * cd.cartan(i, j) == cd.weights(j) * cd.cartan(j, i));
    }
  }
}

TEST_CASE("bilinear form") {
  const CartanData b2 = build_cartan("B2");
  CHECK(bilinear<std::int64_t>(make_vector({1, 0}), make_vector({1, 0}), b2) == 4);
  CHECK(bilinear<std::int64_t>(make_vector({0, 1}), make_vector({0, 1}), b2) == 2);
  CHECK(bilinear<std::int64_t>(make_vector({1, 0}), make_vector({0, 1}), b2) == -2);
  CHECK_THROWS_AS(bilinear<std::int64_t>(make_vector({1}), make_vector({0, 1}), b2), Error);
}

TEST_CASE("Weyl group orders") {
  CHECK(weyl_order(build_cartan("A2")) == 6);
  CHECK(weyl_order(build_cartan("B2")) == 8);
  CHECK(weyl_order(build_cartan("E8")) == 696729600);
  CHECK(weyl_order(build_cartan("B2xG2")) == 96);
  for (const char* t : {"A3", "B3", "C3", "G2", "A1xA2"}) {
    const CartanData cd = build_cartan(t);
    std::vector<int> all(static_cast<std::size_t>(cd.n));
    std::iota(all.begin(), all.end(), 0);
    CHECK(static_cast<Count>(oracle::enumerate_matrix_group(cd, all, 100000).size()) == weyl_order(cd));
  }
}

TEST_CASE("subdiagram classification and parabolic orders") {
  const CartanData e8 = build_cartan("E8");
  const std::array<int, 2> split{0, 2};
  const auto parts = classify_subdiagram(e8, split);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0] == TypeComponent{Family::A, 2});
  const std::array<int, 7> d7{1, 2, 3, 4, 5, 6, 7};
  CHECK(parabolic_order(e8, d7) == 322560);  // E8 minus vertex 1 is D7
  const std::array<int, 1> branch_leaf{1};
  CHECK(weyl_order(e8, branch_leaf) == 40320);  // E8 minus vertex 2 is A7

  const CartanData f4 = build_cartan("F4");
  const std::array<int, 3> b3{0, 1, 2};
  const std::array<int, 3> c3{1, 2, 3};
  CHECK(classify_subdiagram(f4, b3).front().family == Family::B);
  CHECK(classify_subdiagram(f4, c3).front().family == Family::C);
  const std::array<int, 2> bad{0, 0};
  CHECK(code_of([&] { parabolic_order(f4, bad); }) == ErrorCode::BadIndexSet);
  const std::array<int, 1> out{4};
  CHECK(code_of([&] { parabolic_order(f4, out); }) == ErrorCode::BadIndexSet);
}
