#include "weylell/oracles.hpp"

#include <map>
#include <set>
#include <unordered_set>

namespace weylell::oracle {

namespace {

struct MatrixHash {
  std::size_t operator()(const IntMatrix& m) const noexcept {
    const IntVector flat = Eigen::Map<const IntVector>(m.data(), m.size());
    return VectorHash{}(flat);
  }
};

struct MatrixEqual {
  bool operator()(const IntMatrix& a, const IntMatrix& b) const {
    return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
  }
};

IntMatrix reflection_matrix(const CartanData& cd, int i) {
  IntMatrix s = IntMatrix::Identity(cd.n, cd.n);
  for (int j = 0; j < cd.n; ++j) s(i, j) -= cd.cartan(i, j);
  return s;
}

}  // namespace

std::vector<IntMatrix> enumerate_matrix_group(const CartanData& cd, std::span<const int> generators, Count cap) {
  std::vector<IntMatrix> gens;
  for (int i : generators) gens.push_back(reflection_matrix(cd, i));
  std::unordered_set<IntMatrix, MatrixHash, MatrixEqual> seen;
  std::vector<IntMatrix> all{IntMatrix::Identity(cd.n, cd.n)};
  seen.insert(all[0]);
  for (std::size_t head = 0; head < all.size(); ++head) {
    for (const auto& g : gens) {
      IntMatrix next = all[head] * g;
      if (seen.insert(next).second) {
        all.push_back(std::move(next));
        if (static_cast<Count>(all.size()) > cap) throw Error(ErrorCode::CapExceeded, "matrix group cap");
      }
    }
  }
  return all;
}

std::vector<std::vector<int>> reduced_words_by_search(const IntMatrix& target, const CartanData& cd,
                                                      std::size_t max_length) {
  std::vector<IntMatrix> gens;
  for (int i = 0; i < cd.n; ++i) gens.push_back(reflection_matrix(cd, i));
  // layer k holds every reduced word of length k with its product; a word
  // whose product already appeared at a shorter length is not reduced
  std::vector<std::pair<std::vector<int>, IntMatrix>> layer{{{}, IntMatrix::Identity(cd.n, cd.n)}};
  std::set<std::vector<std::int64_t>> seen;
  auto key = [](const IntMatrix& m) { return std::vector<std::int64_t>(m.data(), m.data() + m.size()); };
  for (std::size_t len = 0; len <= max_length; ++len) {
    std::vector<std::vector<int>> hits;
    for (const auto& [word, mat] : layer) {
      if (mat == target) hits.push_back(word);
    }
    if (!hits.empty()) return hits;
    for (const auto& entry : layer) seen.insert(key(entry.second));
    std::vector<std::pair<std::vector<int>, IntMatrix>> next;
    for (const auto& [word, mat] : layer) {
      for (int i = 0; i < cd.n; ++i) {
        IntMatrix product = mat * gens[static_cast<std::size_t>(i)];
        if (seen.count(key(product))) continue;
        std::vector<int> w = word;
        w.push_back(i);
        next.emplace_back(std::move(w), std::move(product));
      }
    }
    layer = std::move(next);
  }
  throw Error(ErrorCode::CapExceeded, "no word up to the length bound");
}

std::set<IntVector, LexLess> distinct_root_sums(const CartanData& cd) {
  std::set<IntVector, LexLess> sums{IntVector::Zero(cd.n)};
  for (const Root& r : cd.roots) {
    std::set<IntVector, LexLess> next = sums;
    for (const auto& s : sums) next.insert(IntVector(s + r.coords));
    sums = std::move(next);
  }
  return sums;
}

Count e8_theta_coefficient(std::int64_t m) {
  Count sigma3 = 0;
  for (std::int64_t d = 1; d <= m; ++d) {
    if (m % d == 0) sigma3 = checked_add(sigma3, checked_mul(checked_mul(d, d), d));
  }
  return checked_mul(240, sigma3);
}

Count classical_root_count(const TypeComponent& c) {
  const Count n = c.rank;
  switch (c.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

std::int64_t classical_determinant(const TypeComponent& c) {
  switch (c.family) {
    case Family::A: return c.rank + 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::E: return 9 - c.rank;
    case Family::F:
    case Family::G: return 1;
  }
  return 0;
}

}  // namespace weylell::oracle
