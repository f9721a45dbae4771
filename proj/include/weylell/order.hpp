#ifndef WEYLELL_ORDER_HPP
#define WEYLELL_ORDER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylell/weyl_group.hpp"

namespace weylell {

enum class PosetKind { primary, bruhat_primary_filtered, bruhat_subword };

std::string_view to_string(PosetKind kind);

/// Square boolean matrix stored as packed rows.
class Relation {
 public:
  explicit Relation(std::size_t n = 0);

  std::size_t size() const { return n_; }
  bool test(std::size_t a, std::size_t b) const { return (row(a)[b / 64] >> (b % 64)) & 1U; }
  void set(std::size_t a, std::size_t b) { rows_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64); }
  /// row(a) |= row(b)
  void merge_row(std::size_t a, std::size_t b);
  std::size_t count() const;
  Relation transpose() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  friend std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const Relation&);
  const std::uint64_t* row(std::size_t a) const { return rows_.data() + a * words_; }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Hasse diagram of a finite poset on main-orbit vectors.
struct Poset {
  std::vector<IntVector> nodes;                             ///< lexicographic
  std::vector<std::pair<std::size_t, std::size_t>> covers;  ///< (a, b): a covered by b
  std::vector<std::size_t> lengths;                         ///< Coxeter length per node
  PosetKind kind = PosetKind::primary;
};

/// Reflexive-transitive closure of the cover relation.
Relation reachability(const Poset& p);

/// Cover pairs of a partial order given as its (reflexive or strict) relation.
std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const Relation& order);

/// Componentwise order on the P-vectors of the table.
Poset primary_poset(const GroupTable& table);

/// Which primary links are offered to the root-multiple filter.
enum class LinkScope {
  comparable_pairs,  ///< every a < b of the primary order
  covers,            ///< only the primary covers
};

/// Bruhat order from the primary realization: keep the links a < b whose
/// difference b - a is a positive multiple of a positive root, then close and
/// reduce. With LinkScope::covers the construction is applied to the primary
/// Hasse diagram only; that variant loses Bruhat covers already in A3.
Poset bruhat_from_primary(const GroupTable& table, const std::vector<Root>& roots,
                          LinkScope scope = LinkScope::comparable_pairs);

/// Bruhat order by the subword property: u <= w iff u is a subword product of
/// a fixed reduced word of w.
Poset bruhat_from_subwords(const GroupTable& table);

/// Same partial order (identical reachability on identical nodes).
bool same_order(const Poset& a, const Poset& b);

/// Primary covers (a, b) whose endpoints are incomparable in `bruhat`.
std::vector<std::pair<IntVector, IntVector>> primary_discrepancies(const Poset& primary, const Poset& bruhat);

/// Indices i (0-based, ascending) with (A w delta)_i < 0: the simple
/// reflections that can start a reduced expression of w.
std::vector<int> first_letters(const WeylElement& w, const CartanData& cd);

/// Coxeter length, found by stripping first letters down to the identity.
std::size_t coxeter_length(const WeylElement& w, const CartanData& cd);

struct ReducedWordSet {
  IntVector element;  ///< P-vector
  std::size_t length = 0;
  std::vector<std::vector<int>> words;  ///< sorted
};

/// Every reduced expression of w, by peeling off admissible first letters.
ReducedWordSet reduced_words(const WeylElement& w, const CartanData& cd);

/// DOT digraph, bottom to top, nodes grouped by Coxeter length.
std::string emit_dot(const Poset& p);

}  // namespace weylell

#endif  // WEYLELL_ORDER_HPP
