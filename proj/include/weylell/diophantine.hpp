#ifndef WEYLELL_DIOPHANTINE_HPP
#define WEYLELL_DIOPHANTINE_HPP

#include <optional>
#include <vector>

#include "weylell/ellipsoid.hpp"

namespace weylell {

inline constexpr Count kDefaultOrbitCap = 10'000'000;

/// One orbit of the T_i on the integral points of the primary ellipsoid.
struct OrbitRecord {
  IntVector h;        ///< nonnegative secondary solution indexing the orbit
  IntVector minimal;  ///< A^-1 (1 - h), the componentwise minimum of the orbit
  Count size = 0;     ///< |W| / |W_h|
  std::optional<std::vector<IntVector>> elements;  ///< sorted, when expanded
};

/// All h >= 0 on the secondary ellipsoid, lexicographically sorted.
///
/// Searches <A^-1 h, A^-1 h> = <delta, delta>, the centred form of the
/// secondary equation, over the nonnegative orthant.
std::vector<IntVector> enumerate_secondary_nonneg(const CartanData& cd, int threads = 1);

/// Nonnegative secondary solutions with integral A^-1 (1 - h), one per orbit,
/// sorted by minimal vector.
std::vector<OrbitRecord> orbit_seeds(const CartanData& cd, int threads = 1);

/// |W| / |W_h| where W_h is generated by the reflections at the zero entries
/// of h. Throws NotASolution unless h >= 0 lies on the secondary ellipsoid.
Count orbit_size(const IntVector& h, const CartanData& cd);

/// Closure of {a} under every T_i, sorted. Throws NotOnEllipsoid, or
/// CapExceeded once more than `cap` points have been collected.
std::vector<IntVector> expand_orbit(const IntVector& a, const CartanData& cd, Count cap = kDefaultOrbitCap);

/// Upward sweep: from each point x apply only the T_i with h^x_i > 0 until
/// no positive component remains. Starting at a minimal vector it reaches the
/// whole orbit. Same errors as expand_orbit.
std::vector<IntVector> sweep_orbit(const IntVector& a, const CartanData& cd, Count cap = kDefaultOrbitCap);

/// Integer box [lower, upper] containing every integral primary solution:
/// (x_i - delta_i)^2 <= <delta,delta> * (gram^-1)_ii.
struct Box {
  IntVector lower;
  IntVector upper;
  Count volume() const;
};
Box primary_bounding_box(const CartanData& cd);

/// Every integral primary solution found by scanning the bounding box point
/// by point. Throws CapExceeded when the box has more than `max_points` points.
std::vector<IntVector> scan_primary_box(const CartanData& cd, Count max_points = 50'000'000);

}  // namespace weylell

#endif  // WEYLELL_DIOPHANTINE_HPP
