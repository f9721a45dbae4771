#include "weylell/order.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "weylell/ellipsoid.hpp"

namespace weylell {

std::string_view to_string(PosetKind kind) {
  switch (kind) {
    case PosetKind::primary: return "primary";
    case PosetKind::bruhat_primary_filtered: return "bruhat_primary_filtered";
    case PosetKind::bruhat_subword: return "bruhat_subword";
  }
  return "unknown";
}

Relation::Relation(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {}

void Relation::merge_row(std::size_t a, std::size_t b) {
  for (std::size_t w = 0; w < words_; ++w) rows_[a * words_ + w] |= rows_[b * words_ + w];
}

std::size_t Relation::count() const {
  std::size_t c = 0;
  for (auto w : rows_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

Relation Relation::transpose() const {
  Relation t(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      if (test(a, b)) t.set(b, a);
    }
  }
  return t;
}

namespace {

// Reflexive-transitive closure of a DAG given by its edges.
Relation close(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [a, b] : edges) {
    out[a].push_back(b);
    ++indegree[b];
  }
  std::vector<std::size_t> topo;
  topo.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) topo.push_back(v);
  }
  for (std::size_t head = 0; head < topo.size(); ++head) {
    for (std::size_t b : out[topo[head]]) {
      if (--indegree[b] == 0) topo.push_back(b);
    }
  }
  if (topo.size() != n) throw Error(ErrorCode::DimensionMismatch, "cover relation has a cycle");
  Relation r(n);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    r.set(*it, *it);
    for (std::size_t b : out[*it]) r.merge_row(*it, b);
  }
  return r;
}

using RootSet = std::set<IntVector, LexLess>;

bool positive_root_multiple(const IntVector& diff, const RootSet& roots) {
  if ((diff.array() < 0).any() || diff.isZero()) return false;
  std::int64_t g = 0;
  for (Eigen::Index i = 0; i < diff.size(); ++i) g = std::gcd(g, diff(i));
  // roots are primitive lattice vectors, so c * alpha reduces to alpha
  return roots.count(IntVector(diff / g)) > 0;
}

std::vector<std::size_t> table_lengths(const GroupTable& table) {
  std::vector<std::size_t> lengths(table.size());
  for (std::size_t k = 0; k < table.size(); ++k) lengths[k] = table.length(k);
  return lengths;
}

Relation componentwise(const GroupTable& table) {
  const std::size_t n = table.size();
  Relation r(n);
  for (std::size_t a = 0; a < n; ++a) {
    // lexicographic order extends the componentwise one
    for (std::size_t b = a; b < n; ++b) {
      if (componentwise_le(table.p_vector(a), table.p_vector(b))) r.set(a, b);
    }
  }
  return r;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const Relation& order) {
  const std::size_t n = order.size();
  const Relation down = order.transpose();
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::vector<std::uint64_t> up(order.words_);
  for (std::size_t a = 0; a < n; ++a) {
    std::copy(order.row(a), order.row(a) + order.words_, up.begin());
    up[a / 64] &= ~(std::uint64_t{1} << (a % 64));
    for (std::size_t b = 0; b < n; ++b) {
      if (!((up[b / 64] >> (b % 64)) & 1U)) continue;
      // b covers a iff no c with a < c < b
      const std::uint64_t* below_b = down.row(b);
      bool between = false;
      for (std::size_t w = 0; w < order.words_ && !between; ++w) {
        std::uint64_t m = up[w] & below_b[w];
        if (w == b / 64) m &= ~(std::uint64_t{1} << (b % 64));
        between = m != 0;
      }
      if (!between) covers.emplace_back(a, b);
    }
  }
  return covers;
}

Relation reachability(const Poset& p) { return close(p.nodes.size(), p.covers); }

Poset primary_poset(const GroupTable& table) {
  Poset p;
  p.nodes = table.keys();
  p.lengths = table_lengths(table);
  p.kind = PosetKind::primary;
  p.covers = transitive_reduction(componentwise(table));
  return p;
}

Poset bruhat_from_primary(const GroupTable& table, const std::vector<Root>& roots, LinkScope scope) {
  RootSet root_set;
  for (const Root& r : roots) root_set.insert(r.coords);
  std::vector<std::pair<std::size_t, std::size_t>> links;
  if (scope == LinkScope::covers) {
    links = primary_poset(table).covers;
  } else {
    const Relation le = componentwise(table);
    for (std::size_t a = 0; a < table.size(); ++a) {
      for (std::size_t b = a + 1; b < table.size(); ++b) {
        if (le.test(a, b)) links.emplace_back(a, b);
      }
    }
  }
  std::erase_if(links, [&](const auto& link) {
    return !positive_root_multiple(IntVector(table.p_vector(link.second) - table.p_vector(link.first)), root_set);
  });
  Poset p;
  p.nodes = table.keys();
  p.lengths = table_lengths(table);
  p.kind = PosetKind::bruhat_primary_filtered;
  p.covers = transitive_reduction(close(table.size(), links));
  return p;
}

Poset bruhat_from_subwords(const GroupTable& table) {
  const std::size_t n = table.size();
  Relation below(n);  // below(u, w): u <= w
  std::vector<char> in_set(n, 0);
  for (std::size_t w = 0; w < n; ++w) {
    std::fill(in_set.begin(), in_set.end(), 0);
    std::vector<std::size_t> members{table.identity()};
    in_set[members[0]] = 1;
    for (int letter : table.element(w).word) {
      const std::size_t current = members.size();
      for (std::size_t k = 0; k < current; ++k) {
        const std::size_t next = table.right_multiply(members[k], letter);
        if (!in_set[next]) {
          in_set[next] = 1;
          members.push_back(next);
        }
      }
    }
    for (std::size_t u : members) below.set(u, w);
  }
  Poset p;
  p.nodes = table.keys();
  p.lengths = table_lengths(table);
  p.kind = PosetKind::bruhat_subword;
  p.covers = transitive_reduction(below);
  return p;
}

bool same_order(const Poset& a, const Poset& b) {
  if (a.nodes.size() != b.nodes.size()) return false;
  for (std::size_t k = 0; k < a.nodes.size(); ++k) {
    if (a.nodes[k] != b.nodes[k]) return false;
  }
  return reachability(a) == reachability(b);
}

std::vector<std::pair<IntVector, IntVector>> primary_discrepancies(const Poset& primary, const Poset& bruhat) {
  const Relation reach = reachability(bruhat);
  std::vector<std::pair<IntVector, IntVector>> out;
  for (auto [a, b] : primary.covers) {
    if (!reach.test(a, b)) out.emplace_back(primary.nodes[a], primary.nodes[b]);
  }
  return out;
}

std::vector<int> first_letters(const WeylElement& w, const CartanData& cd) {
  const IntVector s = s_map(w, cd);
  std::vector<int> out;
  for (int i = 0; i < cd.n; ++i) {
    if (s(i) < 0) out.push_back(i);
  }
  return out;
}

std::size_t coxeter_length(const WeylElement& w, const CartanData& cd) {
  IntMatrix m = w.mat;
  std::size_t length = 0;
  for (;;) {
    const std::vector<int> letters = first_letters(WeylElement{m, {}}, cd);
    if (letters.empty()) return length;
    m = simple_reflection(letters.front(), cd).mat * m;
    ++length;
  }
}

namespace {

// P-vector of s_{w_1} ... s_{w_l}, built with T_i(P(v)) = P(s_i v).
IntVector p_of_word(const std::vector<int>& word, const CartanData& cd) {
  IntVector x = IntVector::Zero(cd.n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) x(*it) += 1 - cd.cartan.row(*it).dot(x);
  return x;
}

using WordList = std::vector<std::vector<int>>;
using Memo = std::map<IntVector, WordList, LexLess>;

const WordList& words_of(const WeylElement& w, const CartanData& cd, Memo& memo) {
  const IntVector key = p_map(w, cd);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  WordList words;
  const std::vector<int> letters = first_letters(w, cd);
  if (letters.empty()) {
    words.emplace_back();
  }
  for (int i : letters) {
    const WeylElement rest{simple_reflection(i, cd).mat * w.mat, {}};
    for (const auto& tail : words_of(rest, cd, memo)) {
      std::vector<int> word{i};
      word.insert(word.end(), tail.begin(), tail.end());
      words.push_back(std::move(word));
    }
  }
  return memo.emplace(key, std::move(words)).first->second;
}

}  // namespace

ReducedWordSet reduced_words(const WeylElement& w, const CartanData& cd) {
  Memo memo;
  ReducedWordSet out;
  out.element = p_map(w, cd);
  out.words = words_of(w, cd, memo);
  std::sort(out.words.begin(), out.words.end());
  out.length = out.words.front().size();
  for (const auto& word : out.words) {
    if (word.size() != out.length || p_of_word(word, cd) != out.element) {
      throw Error(ErrorCode::NotAMultiple, "reduced word check failed for " + format(out.element));
    }
  }
  return out;
}

std::string emit_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph " << to_string(p.kind) << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  for (std::size_t k = 0; k < p.nodes.size(); ++k) {
    os << "  n" << k << " [label=\"" << format(p.nodes[k]) << "\"];\n";
  }
  if (p.lengths.size() == p.nodes.size()) {
    std::map<std::size_t, std::vector<std::size_t>> ranks;
    for (std::size_t k = 0; k < p.nodes.size(); ++k) ranks[p.lengths[k]].push_back(k);
    for (const auto& [len, members] : ranks) {
      os << "  { rank=same;";
      for (std::size_t k : members) os << " n" << k << ";";
      os << " }\n";
    }
  }
  for (auto [a, b] : p.covers) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace weylell
