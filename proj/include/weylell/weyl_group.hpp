#ifndef WEYLELL_WEYL_GROUP_HPP
#define WEYLELL_WEYL_GROUP_HPP

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "weylell/cartan.hpp"

namespace weylell {

inline constexpr Count kDefaultGroupCap = 1'000'000;

/// An element of the Weyl group as an integer matrix acting on coordinate
/// columns in the simple-root basis, with a word that produces it.
struct WeylElement {
  IntMatrix mat;
  std::vector<int> word;  ///< 0-based simple-reflection indices, product read left to right
};

WeylElement identity_element(const CartanData& cd);

/// s_i: e_j -> e_j - A_ij e_i. Throws IndexOutOfRange.
WeylElement simple_reflection(int i, const CartanData& cd);

/// s_{w0} s_{w1} ... as a matrix product; the empty word is the identity.
WeylElement word_to_element(std::span<const int> word, const CartanData& cd);

/// w * v (matrix product, word concatenation).
WeylElement compose(const WeylElement& w, const WeylElement& v);

/// delta - w delta. Always integral.
IntVector p_map(const WeylElement& w, const CartanData& cd);

/// A w delta, which equals h_vector(p_map(w)).
IntVector s_map(const WeylElement& w, const CartanData& cd);

/// The full group, keyed by P-vectors.
///
/// Built breadth first from the identity by right multiplication with simple
/// reflections, so every stored word is a shortest one. Entries are indexed
/// in lexicographic order of their P-vectors.
class GroupTable {
 public:
  const CartanData& cartan() const { return cd_; }
  std::size_t size() const { return keys_.size(); }
  Count order() const { return static_cast<Count>(keys_.size()); }

  const std::vector<IntVector>& keys() const { return keys_; }
  const IntVector& p_vector(std::size_t idx) const { return keys_[idx]; }
  const WeylElement& element(std::size_t idx) const { return elements_[idx]; }
  std::size_t length(std::size_t idx) const { return elements_[idx].word.size(); }

  std::optional<std::size_t> find(const IntVector& p) const;
  /// Throws NotInMainOrbit.
  std::size_t index_of(const IntVector& p) const;

  std::size_t right_multiply(std::size_t idx, int i) const { return right_[idx][static_cast<std::size_t>(i)]; }
  std::size_t left_multiply(std::size_t idx, int i) const { return left_[idx][static_cast<std::size_t>(i)]; }

  std::size_t identity() const { return index_of(IntVector::Zero(cd_.n)); }

 private:
  friend GroupTable build_group_table(const CartanData& cd, Count cap);

  CartanData cd_;
  std::vector<IntVector> keys_;
  std::vector<WeylElement> elements_;
  std::vector<std::vector<std::size_t>> right_;
  std::vector<std::vector<std::size_t>> left_;
  std::unordered_map<IntVector, std::size_t, VectorHash, VectorEqual> index_;
};

/// Throws CapExceeded when |W| > cap.
GroupTable build_group_table(const CartanData& cd, Count cap = kDefaultGroupCap);

/// P(P^-1(a) P^-1(b)). Throws NotInMainOrbit.
IntVector star(const IntVector& a, const IntVector& b, const GroupTable& table);

/// The integer p with (m_alpha alpha) * b = p alpha + b. Throws NotARoot for
/// a non-positive-root alpha, NotInMainOrbit, and NotAMultiple if the
/// difference is not a nonzero integer multiple of alpha.
std::int64_t p_alpha_b(const IntVector& alpha, const IntVector& b, const GroupTable& table);

}  // namespace weylell

#endif  // WEYLELL_WEYL_GROUP_HPP
