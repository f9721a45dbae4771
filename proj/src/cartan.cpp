#include "weylell/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "weylell/exact_linalg.hpp"

namespace weylell {

int LieTypeSpec::rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

void validate(const TypeComponent& c) {
  bool ok = false;
  switch (c.family) {
    case Family::A: ok = c.rank >= 1; break;
    case Family::B: ok = c.rank >= 2; break;
    case Family::C: ok = c.rank >= 3; break;
    case Family::D: ok = c.rank >= 4; break;
    case Family::E: ok = c.rank >= 6 && c.rank <= 8; break;
    case Family::F: ok = c.rank == 4; break;
    case Family::G: ok = c.rank == 2; break;
  }
  if (!ok) throw Error(ErrorCode::RankOutOfRange, to_string(c));
}

std::string to_string(const TypeComponent& c) {
  return std::string(1, static_cast<char>(c.family)) + std::to_string(c.rank);
}

std::string to_string(const LieTypeSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    if (i) out += 'x';
    out += to_string(spec.components[i]);
  }
  return out;
}

LieTypeSpec parse_type(std::string_view text) {
  LieTypeSpec spec;
  if (text.empty()) throw Error(ErrorCode::Parse, "empty type string");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find('x', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view token = text.substr(pos, next - pos);
    if (token.size() < 2) throw Error(ErrorCode::Parse, "malformed type token '" + std::string(token) + "'");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(token.front())));
    if (std::string_view("ABCDEFG").find(letter) == std::string_view::npos) {
      throw Error(ErrorCode::UnknownFamily, std::string(token));
    }
    int rank = 0;
    auto [end, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), rank);
    if (ec == std::errc::result_out_of_range) throw Error(ErrorCode::RankOutOfRange, std::string(token));
    if (ec != std::errc() || end != token.data() + token.size()) {
      throw Error(ErrorCode::Parse, "malformed type token '" + std::string(token) + "'");
    }
    TypeComponent c{static_cast<Family>(letter), rank};
    validate(c);
    spec.components.push_back(c);
    pos = next + 1;
  }
  return spec;
}

namespace {

IntMatrix component_cartan(const TypeComponent& c) {
  const int n = c.rank;
  IntMatrix a = IntMatrix::Zero(n, n);
  a.diagonal().setConstant(2);
  auto link = [&a](int i, int j, std::int64_t aij = -1, std::int64_t aji = -1) {
    a(i, j) = aij;
    a(j, i) = aji;
  };
  switch (c.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -1, -2);  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -2, -1);  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(0, 1);
      link(1, 2, -1, -2);  // alpha_1, alpha_2 long
      link(2, 3);
      break;
    case Family::G:
      link(0, 1, -3, -1);  // alpha_1 short
      break;
  }
  return a;
}

// Symmetrizer with the shortest root normalized to k = 1: k_i A_ij = k_j A_ji.
IntVector symmetrizer(const IntMatrix& a) {
  const Eigen::Index n = a.rows();
  RatVector k = RatVector::Zero(n);
  k(0) = Rational(1);
  std::vector<Eigen::Index> stack{0};
  while (!stack.empty()) {
    const Eigen::Index i = stack.back();
    stack.pop_back();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j || a(i, j) == 0 || k(j) != Rational(0)) continue;
      k(j) = k(i) * Rational(a(i, j)) / Rational(a(j, i));
      stack.push_back(j);
    }
  }
  Rational smallest = k(0);
  for (Eigen::Index i = 1; i < n; ++i) smallest = std::min(smallest, k(i));
  return to_integral(RatVector(k / smallest));
}

IntVector reflect(const IntVector& x, Eigen::Index i, const IntMatrix& a) {
  IntVector y = x;
  y(i) -= a.row(i).dot(x);
  return y;
}

std::vector<Root> close_positive_roots(const CartanData& cd) {
  std::set<IntVector, LexLess> found;
  std::vector<IntVector> frontier;
  for (int i = 0; i < cd.n; ++i) {
    IntVector e = IntVector::Unit(cd.n, i);
    found.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const auto& r : frontier) {
      for (int i = 0; i < cd.n; ++i) {
        IntVector s = reflect(r, i, cd.cartan);
        if ((s.array() >= 0).all() && !s.isZero() && found.insert(s).second) next.push_back(s);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Root> roots;
  roots.reserve(found.size());
  for (const auto& coords : found) {
    Root r;
    r.coords = coords;
    r.length_sq = bilinear<std::int64_t>(coords, coords, cd);
    r.grade = grade(coords, cd);
    roots.push_back(std::move(r));
  }
  return roots;
}

}  // namespace

CartanData build_cartan(const LieTypeSpec& spec) {
  if (spec.components.empty()) throw Error(ErrorCode::Parse, "type has no components");
  CartanData cd;
  cd.type = spec;
  cd.n = spec.rank();
  cd.cartan = IntMatrix::Zero(cd.n, cd.n);
  cd.weights = IntVector::Zero(cd.n);
  int offset = 0;
  for (std::size_t c = 0; c < spec.components.size(); ++c) {
    validate(spec.components[c]);
    const IntMatrix block = component_cartan(spec.components[c]);
    const int r = spec.components[c].rank;
    cd.cartan.block(offset, offset, r, r) = block;
    cd.weights.segment(offset, r) = symmetrizer(block);
    for (int i = 0; i < r; ++i) cd.component_of.push_back(static_cast<int>(c));
    offset += r;
  }
  cd.gram = cd.weights.asDiagonal() * cd.cartan;
  cd.links = IntMatrix::Zero(cd.n, cd.n);
  for (int i = 0; i < cd.n; ++i) {
    for (int j = 0; j < cd.n; ++j) {
      if (i != j && cd.cartan(i, j) != 0) cd.links(i, j) = std::max(cd.weights(i), cd.weights(j));
    }
  }
  const RatMatrix a = cd.cartan.cast<Rational>();
  cd.inverse = exact_inverse(a);
  cd.det = exact_determinant(a).to_integer();
  cd.delta = cd.inverse * RatVector::Ones(cd.n);
  cd.roots = close_positive_roots(cd);
  return cd;
}

bool is_positive_root(const IntVector& coords, const CartanData& cd) {
  if (coords.size() != cd.n) return false;
  auto it = std::lower_bound(cd.roots.begin(), cd.roots.end(), coords,
                             [](const Root& r, const IntVector& v) { return LexLess{}(r.coords, v); });
  return it != cd.roots.end() && it->coords == coords;
}

std::int64_t grade(const IntVector& alpha, const CartanData& cd) {
  if (alpha.size() != cd.n) throw Error(ErrorCode::DimensionMismatch, "root of wrong length");
  // roots are being filled during construction: positivity check is skipped then
  if (!cd.roots.empty() && !is_positive_root(alpha, cd) && !is_positive_root(IntVector(-alpha), cd)) {
    throw Error(ErrorCode::NotARoot, format(alpha));
  }
  const RatVector a = alpha.cast<Rational>();
  const Rational m = Rational(2) * bilinear(a, cd.delta, cd) / bilinear(a, a, cd);
  return m.to_integer();
}

Count catalog_order(const TypeComponent& c) {
  validate(c);
  auto factorial = [](int n) {
    Count f = 1;
    for (int i = 2; i <= n; ++i) f = checked_mul(f, i);
    return f;
  };
  auto pow2 = [](int n) {
    Count p = 1;
    for (int i = 0; i < n; ++i) p = checked_mul(p, 2);
    return p;
  };
  switch (c.family) {
    case Family::A: return factorial(c.rank + 1);
    case Family::B:
    case Family::C: return checked_mul(pow2(c.rank), factorial(c.rank));
    case Family::D: return checked_mul(pow2(c.rank - 1), factorial(c.rank));
    case Family::E:
      return c.rank == 6 ? 51840 : c.rank == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

namespace {

void check_index_set(const CartanData& cd, std::span<const int> idx) {
  std::vector<int> sorted(idx.begin(), idx.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::BadIndexSet, "repeated index");
  }
  for (int i : sorted) {
    if (i < 0 || i >= cd.n) throw Error(ErrorCode::BadIndexSet, "index " + std::to_string(i + 1) + " out of range");
  }
}

TypeComponent classify_connected(const CartanData& cd, const std::vector<int>& verts) {
  const int r = static_cast<int>(verts.size());
  if (r == 1) return {Family::A, 1};
  std::vector<int> degree(r, 0);
  int double_a = -1, double_b = -1;
  bool triple = false;
  for (int p = 0; p < r; ++p) {
    for (int q = p + 1; q < r; ++q) {
      const std::int64_t m = cd.cartan(verts[p], verts[q]) * cd.cartan(verts[q], verts[p]);
      if (m == 0) continue;
      ++degree[p];
      ++degree[q];
      if (m == 2) {
        double_a = p;
        double_b = q;
      }
      if (m == 3) triple = true;
    }
  }
  if (triple) return {Family::G, 2};
  if (double_a >= 0) {
    if (r == 2) return {Family::B, 2};
    if (degree[double_a] == 2 && degree[double_b] == 2) return {Family::F, 4};
    // the leaf end of the double link is short in B_r and long in C_r
    const int leaf = degree[double_a] == 1 ? double_a : double_b;
    const int inner = leaf == double_a ? double_b : double_a;
    return {cd.weights(verts[leaf]) < cd.weights(verts[inner]) ? Family::B : Family::C, r};
  }
  const auto branch = std::find(degree.begin(), degree.end(), 3);
  if (branch == degree.end()) return {Family::A, r};
  // arm lengths from the branch vertex
  const int centre = static_cast<int>(branch - degree.begin());
  std::vector<int> arms;
  for (int start = 0; start < r; ++start) {
    if (start == centre || cd.cartan(verts[centre], verts[start]) == 0) continue;
    int prev = centre, cur = start, len = 1;
    while (true) {
      int nxt = -1;
      for (int q = 0; q < r; ++q) {
        if (q != cur && q != prev && cd.cartan(verts[cur], verts[q]) != 0) nxt = q;
      }
      if (nxt < 0) break;
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, r};
  return {Family::E, r};
}

}  // namespace

std::vector<TypeComponent> classify_subdiagram(const CartanData& cd, std::span<const int> vertices) {
  check_index_set(cd, vertices);
  std::vector<int> pending(vertices.begin(), vertices.end());
  std::sort(pending.begin(), pending.end());
  std::vector<bool> used(pending.size(), false);
  std::vector<TypeComponent> out;
  for (std::size_t s = 0; s < pending.size(); ++s) {
    if (used[s]) continue;
    std::vector<int> comp{pending[s]};
    used[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (std::size_t t = 0; t < pending.size(); ++t) {
        if (!used[t] && cd.cartan(comp[head], pending[t]) != 0) {
          used[t] = true;
          comp.push_back(pending[t]);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(classify_connected(cd, comp));
  }
  return out;
}

Count parabolic_order(const CartanData& cd, std::span<const int> generators) {
  Count order = 1;
  for (const auto& c : classify_subdiagram(cd, generators)) order = checked_mul(order, catalog_order(c));
  return order;
}

Count weyl_order(const CartanData& cd, std::span<const int> excluded) {
  check_index_set(cd, excluded);
  std::vector<int> gens;
  for (int i = 0; i < cd.n; ++i) {
    if (std::find(excluded.begin(), excluded.end(), i) == excluded.end()) gens.push_back(i);
  }
  return parabolic_order(cd, gens);
}

}  // namespace weylell
