#ifndef WEYLELL_CARTAN_HPP
#define WEYLELL_CARTAN_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weylell/types.hpp"

namespace weylell {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// One irreducible factor, e.g. B3.
struct TypeComponent {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const TypeComponent&, const TypeComponent&) = default;
};

/// A finite type as an ordered product of irreducible factors ("B2xG2").
struct LieTypeSpec {
  std::vector<TypeComponent> components;

  int rank() const;

  friend bool operator==(const LieTypeSpec&, const LieTypeSpec&) = default;
};

/// Parses "A3", "B2xG2", ... Throws UnknownFamily, RankOutOfRange or Parse.
LieTypeSpec parse_type(std::string_view text);
std::string to_string(const LieTypeSpec& spec);
std::string to_string(const TypeComponent& component);

/// Throws RankOutOfRange unless the rank is admissible for the family.
void validate(const TypeComponent& component);

/// A positive root in the simple-root basis.
struct Root {
  IntVector coords;
  std::int64_t grade = 0;
  std::int64_t length_sq = 0;  ///< <alpha, alpha>; short roots have 2
};

/// The full exact root-system context of one type.
///
/// Vertices follow Bourbaki numbering inside each factor and factors are
/// assembled block-diagonally in the order given. The Cartan entry is
/// A_ij = 2<e_i,e_j>/<e_i,e_i> and short roots have squared length 2, so the
/// Gram matrix is gram_ij = k_i * A_ij with vertex weights k_i in {1,2,3}.
/// Immutable after construction.
struct CartanData {
  LieTypeSpec type;
  int n = 0;
  IntMatrix cartan;       ///< A
  IntVector weights;      ///< k_i, half squared length of alpha_i
  IntMatrix links;        ///< l_ij = max(k_i,k_j) on linked vertices, else 0
  IntMatrix gram;         ///< <e_i, e_j>
  RatMatrix inverse;      ///< A^-1
  std::int64_t det = 0;   ///< det A
  RatVector delta;        ///< half-sum of positive roots, A * delta = (1,...,1)
  std::vector<Root> roots;             ///< positive roots, lexicographic
  std::vector<int> component_of;       ///< vertex -> factor index
};

CartanData build_cartan(const LieTypeSpec& spec);
inline CartanData build_cartan(std::string_view text) { return build_cartan(parse_type(text)); }

/// <x, y> = x^T gram y. Throws DimensionMismatch.
template <typename Scalar>
Scalar bilinear(const Vector<Scalar>& x, const Vector<Scalar>& y, const CartanData& cd) {
  if (x.size() != cd.n || y.size() != cd.n) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected vectors of length " + std::to_string(cd.n));
  }
  return x.dot(cd.gram.template cast<Scalar>() * y);
}

inline const std::vector<Root>& positive_roots(const CartanData& cd) { return cd.roots; }

/// m_alpha = 2<alpha, delta>/<alpha, alpha> for a root alpha (positive or
/// negative). Throws NotARoot.
std::int64_t grade(const IntVector& alpha, const CartanData& cd);

/// True when coords is a positive root.
bool is_positive_root(const IntVector& coords, const CartanData& cd);

/// |W| of a catalog factor.
Count catalog_order(const TypeComponent& component);

/// Irreducible factors of the subdiagram induced on `vertices` (0-based,
/// distinct, in range). Throws BadIndexSet.
std::vector<TypeComponent> classify_subdiagram(const CartanData& cd, std::span<const int> vertices);

/// Order of the parabolic subgroup generated by the simple reflections at
/// `generators` (0-based). Throws BadIndexSet.
Count parabolic_order(const CartanData& cd, std::span<const int> generators);

/// Order of the parabolic subgroup generated by the reflections NOT in `excluded`.
Count weyl_order(const CartanData& cd, std::span<const int> excluded = {});

}  // namespace weylell

#endif  // WEYLELL_CARTAN_HPP
