#include <algorithm>
#include <array>

#include "doctest.h"
#include "weylell/oracles.hpp"
#include "weylell/order.hpp"

using namespace weylell;

namespace {

bool comparable(const Poset& p, const Relation& reach, const IntVector& a, const IntVector& b) {
  const auto ia = std::find(p.nodes.begin(), p.nodes.end(), a) - p.nodes.begin();
  const auto ib = std::find(p.nodes.begin(), p.nodes.end(), b) - p.nodes.begin();
  return reach.test(static_cast<std::size_t>(ia), static_cast<std::size_t>(ib));
}

}  // namespace

TEST_CASE("relations") {
  Relation r(70);
  r.set(0, 69);
  r.set(69, 3);
  CHECK(r.test(0, 69));
  CHECK_FALSE(r.test(69, 0));
  CHECK(r.count() == 2);
  CHECK(r.transpose().test(69, 0));
  r.merge_row(0, 69);
  CHECK(r.test(0, 3));

  Relation chain(3);
  chain.set(0, 1);
  chain.set(1, 2);
  chain.set(0, 2);
  CHECK(transitive_reduction(chain) == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
}

TEST_CASE("primary poset is the componentwise order") {
  const GroupTable t = build_group_table(build_cartan("A2"));
  const Poset p = primary_poset(t);
  CHECK(p.kind == PosetKind::primary);
  CHECK(p.nodes.size() == 6);
  const Relation reach = reachability(p);
  for (std::size_t a = 0; a < p.nodes.size(); ++a) {
    for (std::size_t b = 0; b < p.nodes.size(); ++b) {
      CHECK(reach.test(a, b) == componentwise_le(p.nodes[a], p.nodes[b]));
    }
  }
}

TEST_CASE("Bruhat order on A2") {
  const CartanData a2 = build_cartan("A2");
  const GroupTable t = build_group_table(a2);
  const Poset sub = bruhat_from_subwords(t);
  const Poset prim = bruhat_from_primary(t, a2.roots);
  CHECK(sub.kind == PosetKind::bruhat_subword);
  CHECK(prim.kind == PosetKind::bruhat_primary_filtered);
  CHECK(sub.covers.size() == 8);
  CHECK(same_order(sub, prim));
  CHECK(sub.covers == prim.covers);
}

TEST_CASE("A3 discrepancies between primary and Bruhat") {
  const CartanData a3 = build_cartan("A3");
  const GroupTable t = build_group_table(a3);
  const Poset primary = primary_poset(t);
  const Poset bruhat = bruhat_from_subwords(t);
  const auto found = primary_discrepancies(primary, bruhat);
  const std::vector<std::pair<IntVector, IntVector>> expected{
      {make_vector({0, 2, 2}), make_vector({1, 2, 3})},
      {make_vector({2, 2, 0}), make_vector({3, 2, 1})}};
  CHECK(found == expected);
  const Relation reach = reachability(bruhat);
  for (const auto& [a, b] : expected) CHECK_FALSE(comparable(bruhat, reach, a, b));
  CHECK(same_order(bruhat_from_primary(t, a3.roots), bruhat));
  // filtering only the primary covers loses Bruhat relations
  CHECK_FALSE(same_order(bruhat_from_primary(t, a3.roots, LinkScope::covers), bruhat));
}

TEST_CASE("Bruhat constructions agree and refine the componentwise order") {
  for (const char* type : {"B2", "G2", "B3", "C3", "A1xA2"}) {
    CAPTURE(type);
    const CartanData cd = build_cartan(type);
    const GroupTable t = build_group_table(cd);
    const Poset sub = bruhat_from_subwords(t);
    CHECK(same_order(sub, bruhat_from_primary(t, cd.roots)));
    const Relation reach = reachability(sub);
    for (std::size_t a = 0; a < sub.nodes.size(); ++a) {
      for (std::size_t b = 0; b < sub.nodes.size(); ++b) {
        if (reach.test(a, b)) CHECK(componentwise_le(sub.nodes[a], sub.nodes[b]));
      }
    }
    for (auto [a, b] : sub.covers) CHECK(sub.lengths[b] == sub.lengths[a] + 1);
  }
}

TEST_CASE("first letters") {
  const CartanData b2 = build_cartan("B2");
  CHECK(first_letters(identity_element(b2), b2).empty());
  CHECK(first_letters(simple_reflection(0, b2), b2) == std::vector<int>{0});
  const std::array<int, 4> w0{0, 1, 0, 1};
  CHECK(first_letters(word_to_element(w0, b2), b2) == std::vector<int>{0, 1});

  const CartanData a3 = build_cartan("A3");
  const GroupTable t = build_group_table(a3);
  for (std::size_t k = 0; k < t.size(); ++k) {
    const WeylElement& w = t.element(k);
    std::vector<int> firsts;
    for (const auto& word : oracle::reduced_words_by_search(w.mat, a3)) {
      if (!word.empty()) firsts.push_back(word.front());
    }
    std::sort(firsts.begin(), firsts.end());
    firsts.erase(std::unique(firsts.begin(), firsts.end()), firsts.end());
    CHECK(first_letters(w, a3) == firsts);
    CHECK(coxeter_length(w, a3) == t.length(k));
  }
}

TEST_CASE("reduced words") {
  const CartanData a2 = build_cartan("A2");
  const ReducedWordSet e = reduced_words(identity_element(a2), a2);
  CHECK(e.length == 0);
  CHECK(e.words == std::vector<std::vector<int>>{{}});

  const std::array<int, 3> w0{0, 1, 0};
  const ReducedWordSet a2w0 = reduced_words(word_to_element(w0, a2), a2);
  CHECK(a2w0.element == make_vector({2, 2}));
  CHECK(a2w0.words == std::vector<std::vector<int>>{{0, 1, 0}, {1, 0, 1}});

  const CartanData b2 = build_cartan("B2");
  const std::array<int, 6> unreduced{0, 1, 1, 0, 1, 0};
  const ReducedWordSet b2w = reduced_words(word_to_element(unreduced, b2), b2);
  CHECK(b2w.length == 2);
  CHECK(b2w.words == std::vector<std::vector<int>>{{1, 0}});

  for (const char* type : {"B3", "A3"}) {
    const CartanData cd = build_cartan(type);
    const GroupTable t = build_group_table(cd);
    for (std::size_t k = 0; k < t.size(); k += 7) {
      const auto ours = reduced_words(t.element(k), cd);
      auto oracle = oracle::reduced_words_by_search(t.element(k).mat, cd);
      std::sort(oracle.begin(), oracle.end());
      CHECK(ours.words == oracle);
    }
  }
}

TEST_CASE("DOT output") {
  const GroupTable a1 = build_group_table(build_cartan("A1"));
  const std::string dot = emit_dot(bruhat_from_subwords(a1));
  CHECK(dot.rfind("digraph bruhat_subword {", 0) == 0);
  CHECK(dot.find("n0 -> n1;") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '>') == 1);
  CHECK(dot == emit_dot(bruhat_from_subwords(a1)));

  const Poset empty{};
  const std::string bare = emit_dot(empty);
  CHECK(bare.rfind("digraph primary {", 0) == 0);
  CHECK(bare.back() == '\n');
  CHECK(bare.find("->") == std::string::npos);
}
