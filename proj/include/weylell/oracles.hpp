#ifndef WEYLELL_ORACLES_HPP
#define WEYLELL_ORACLES_HPP

// Brute-force reference computations. None of these routines goes through
// P-vectors, the T_i, or the lattice enumerator; they exist to cross-check
// the main code paths.

#include <set>
#include <span>
#include <vector>

#include "weylell/cartan.hpp"

namespace weylell::oracle {

/// Matrices of the subgroup generated by the given simple reflections, by
/// closure over matrix products.
std::vector<IntMatrix> enumerate_matrix_group(const CartanData& cd, std::span<const int> generators,
                                              Count cap = 2'000'000);

/// Every word of minimal length that multiplies to `target`, found by
/// breadth-first search over all words of increasing length.
std::vector<std::vector<int>> reduced_words_by_search(const IntMatrix& target, const CartanData& cd,
                                                      std::size_t max_length = 16);

/// Sums of distinct positive roots.
std::set<IntVector, LexLess> distinct_root_sums(const CartanData& cd);

/// The number of vectors of squared norm 2m in the E8 lattice, 240 * sigma_3(m).
Count e8_theta_coefficient(std::int64_t m);

/// Number of positive roots of a catalog factor.
Count classical_root_count(const TypeComponent& c);

/// det A of a catalog factor.
std::int64_t classical_determinant(const TypeComponent& c);

}  // namespace weylell::oracle

#endif  // WEYLELL_ORACLES_HPP
