#ifndef WEYLELL_LATTICE_HPP
#define WEYLELL_LATTICE_HPP

#include <functional>
#include <vector>

#include "weylell/types.hpp"

namespace weylell {

/// Integer points z with z^T Q z <= bound, for symmetric positive-definite Q.
///
/// Depth-first Fincke-Pohst search: Q is split as
/// sum_i d_i (z_i + sum_{j>i} mu_ij z_j)^2 and coordinates are fixed from the
/// last to the first, each one ranging over the exact integer interval left
/// by the partial sum. All interval ends are computed in rational arithmetic
/// with integer floor/ceil, so points on the boundary are never lost.
class LatticeEnumerator {
 public:
  struct Options {
    bool nonnegative = false;  ///< restrict every coordinate to z_i >= 0
    int threads = 1;           ///< split the outermost coordinate across workers
  };

  using Visitor = std::function<void(const IntVector& z, const Rational& value)>;

  LatticeEnumerator(const RatMatrix& q, const Rational& bound, Options options);

  /// Sequential traversal in a fixed order.
  void for_each(const Visitor& visit) const;

  /// All points with z^T Q z == level (level must not exceed the bound),
  /// sorted lexicographically. Uses `threads` workers.
  std::vector<IntVector> on_level(const Rational& level) const;

  /// Number of search-tree nodes visited by the last sequential traversal.
  std::size_t nodes_visited() const { return nodes_; }

 private:
  void descend(Eigen::Index level, IntVector& z, const Rational& remaining, const Visitor& visit,
               std::size_t& nodes) const;
  Rational offset(Eigen::Index level, const IntVector& z) const;
  std::pair<std::int64_t, std::int64_t> range(Eigen::Index level, const Rational& c, const Rational& remaining) const;

  RatVector d_;
  RatMatrix mu_;
  Rational bound_;
  Options options_;
  mutable std::size_t nodes_ = 0;
};

}  // namespace weylell

#endif  // WEYLELL_LATTICE_HPP
