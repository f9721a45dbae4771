#include "weylell/weyl_group.hpp"

#include <algorithm>
#include <numeric>

#include "weylell/ellipsoid.hpp"

namespace weylell {

WeylElement identity_element(const CartanData& cd) { return {IntMatrix::Identity(cd.n, cd.n), {}}; }

WeylElement simple_reflection(int i, const CartanData& cd) {
  if (i < 0 || i >= cd.n) throw Error(ErrorCode::IndexOutOfRange, "reflection index " + std::to_string(i + 1));
  WeylElement s = identity_element(cd);
  s.mat.row(i) -= cd.cartan.row(i);
  s.word = {i};
  return s;
}

WeylElement compose(const WeylElement& w, const WeylElement& v) {
  WeylElement out{w.mat * v.mat, w.word};
  out.word.insert(out.word.end(), v.word.begin(), v.word.end());
  return out;
}

WeylElement word_to_element(std::span<const int> word, const CartanData& cd) {
  WeylElement w = identity_element(cd);
  for (int i : word) w = compose(w, simple_reflection(i, cd));
  return w;
}

IntVector p_map(const WeylElement& w, const CartanData& cd) {
  return to_integral(RatVector(cd.delta - w.mat.cast<Rational>() * cd.delta));
}

IntVector s_map(const WeylElement& w, const CartanData& cd) {
  return to_integral(RatVector(cd.cartan.cast<Rational>() * (w.mat.cast<Rational>() * cd.delta)));
}

std::optional<std::size_t> GroupTable::find(const IntVector& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GroupTable::index_of(const IntVector& p) const {
  if (auto idx = find(p)) return *idx;
  throw Error(ErrorCode::NotInMainOrbit, format(p));
}

GroupTable build_group_table(const CartanData& cd, Count cap) {
  const Count expected = weyl_order(cd);
  if (expected > cap) {
    throw Error(ErrorCode::CapExceeded,
                "|W| = " + std::to_string(expected) + " exceeds the cap " + std::to_string(cap));
  }
  // breadth-first over right multiplication: P(w s_i) = P(w) + w e_i
  std::vector<WeylElement> bfs{identity_element(cd)};
  std::vector<IntVector> bfs_keys{IntVector::Zero(cd.n)};
  std::unordered_map<IntVector, std::size_t, VectorHash, VectorEqual> seen{{bfs_keys[0], 0}};
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    for (int i = 0; i < cd.n; ++i) {
      IntVector p = bfs_keys[head] + bfs[head].mat.col(i);
      if (seen.count(p)) continue;
      WeylElement next = bfs[head];
      for (int j = 0; j < cd.n; ++j) {
        if (j != i && cd.cartan(i, j) != 0) next.mat.col(j) -= cd.cartan(i, j) * bfs[head].mat.col(i);
      }
      next.mat.col(i) = -bfs[head].mat.col(i);
      next.word.push_back(i);
      seen.emplace(p, bfs.size());
      bfs.push_back(std::move(next));
      bfs_keys.push_back(std::move(p));
      if (static_cast<Count>(bfs.size()) > cap) throw Error(ErrorCode::CapExceeded, "group enumeration cap");
    }
  }
  if (static_cast<Count>(bfs.size()) != expected) {
    throw Error(ErrorCode::NotInMainOrbit, "P-vectors collided: enumerated " + std::to_string(bfs.size()) +
                                               " of " + std::to_string(expected) + " elements");
  }

  std::vector<std::size_t> perm(bfs.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return LexLess{}(bfs_keys[a], bfs_keys[b]); });

  GroupTable t;
  t.cd_ = cd;
  t.keys_.reserve(bfs.size());
  t.elements_.reserve(bfs.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    t.keys_.push_back(std::move(bfs_keys[perm[k]]));
    t.elements_.push_back(std::move(bfs[perm[k]]));
    t.index_.emplace(t.keys_.back(), k);
  }
  const std::size_t n = static_cast<std::size_t>(cd.n);
  t.right_.assign(t.size(), std::vector<std::size_t>(n));
  t.left_.assign(t.size(), std::vector<std::size_t>(n));
  for (std::size_t k = 0; k < t.size(); ++k) {
    const IntVector& p = t.keys_[k];
    const IntVector h = h_vector(p, cd);
    for (int i = 0; i < cd.n; ++i) {
      t.right_[k][static_cast<std::size_t>(i)] = t.index_of(IntVector(p + t.elements_[k].mat.col(i)));
      IntVector q = p;
      q(i) += h(i);  // P(s_i w) = T_i(P(w))
      t.left_[k][static_cast<std::size_t>(i)] = t.index_of(q);
    }
  }
  return t;
}

IntVector star(const IntVector& a, const IntVector& b, const GroupTable& table) {
  const std::size_t ia = table.index_of(a);
  table.index_of(b);
  // delta - w_a w_b delta = a + w_a b
  IntVector c = a + table.element(ia).mat * b;
  table.index_of(c);
  return c;
}

std::int64_t p_alpha_b(const IntVector& alpha, const IntVector& b, const GroupTable& table) {
  const CartanData& cd = table.cartan();
  if (!is_positive_root(alpha, cd)) throw Error(ErrorCode::NotARoot, format(alpha) + " is not a positive root");
  const IntVector diff = star(IntVector(grade(alpha, cd) * alpha), b, table) - b;
  Eigen::Index k = 0;
  while (alpha(k) == 0) ++k;
  if (diff(k) % alpha(k) != 0) throw Error(ErrorCode::NotAMultiple, format(diff) + " vs " + format(alpha));
  const std::int64_t p = diff(k) / alpha(k);
  if (p == 0 || diff != p * alpha) throw Error(ErrorCode::NotAMultiple, format(diff) + " vs " + format(alpha));
  return p;
}

}  // namespace weylell
