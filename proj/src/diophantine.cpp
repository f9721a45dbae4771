#include "weylell/diophantine.hpp"

#include <algorithm>
#include <unordered_set>

#include "weylell/exact_linalg.hpp"
#include "weylell/lattice.hpp"

namespace weylell {

namespace {

using PointSet = std::unordered_set<IntVector, VectorHash, VectorEqual>;

// <A^-1 h, A^-1 h> = h^T M h with M = A^-T gram A^-1 = diag(k) A^-1.
RatMatrix centred_secondary_matrix(const CartanData& cd) {
  return cd.inverse.transpose() * cd.gram.cast<Rational>() * cd.inverse;
}

std::vector<IntVector> sorted(const PointSet& set) {
  std::vector<IntVector> out(set.begin(), set.end());
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

void check_cap(const PointSet& seen, Count cap) {
  if (static_cast<Count>(seen.size()) > cap) {
    throw Error(ErrorCode::CapExceeded, "orbit has more than " + std::to_string(cap) + " points");
  }
}

}  // namespace

std::vector<IntVector> enumerate_secondary_nonneg(const CartanData& cd, int threads) {
  const Rational level = bilinear(cd.delta, cd.delta, cd);
  LatticeEnumerator search(centred_secondary_matrix(cd), level, {.nonnegative = true, .threads = threads});
  return search.on_level(level);
}

std::vector<OrbitRecord> orbit_seeds(const CartanData& cd, int threads) {
  std::vector<OrbitRecord> seeds;
  for (const IntVector& h : enumerate_secondary_nonneg(cd, threads)) {
    const RatVector x = cd.inverse * RatVector((ones(cd.n) - h).cast<Rational>());
    if (!std::all_of(x.begin(), x.end(), [](const Rational& q) { return q.is_integer(); })) continue;
    OrbitRecord rec;
    rec.h = h;
    rec.minimal = to_integral(x);
    rec.size = orbit_size(h, cd);
    seeds.push_back(std::move(rec));
  }
  std::sort(seeds.begin(), seeds.end(),
            [](const OrbitRecord& a, const OrbitRecord& b) { return LexLess{}(a.minimal, b.minimal); });
  return seeds;
}

Count orbit_size(const IntVector& h, const CartanData& cd) {
  if (h.size() != cd.n || (h.array() < 0).any() || !on_secondary(h, cd)) {
    throw Error(ErrorCode::NotASolution, format(h) + " is not a nonnegative secondary solution");
  }
  std::vector<int> zeros;
  for (int i = 0; i < cd.n; ++i) {
    if (h(i) == 0) zeros.push_back(i);
  }
  return weyl_order(cd) / parabolic_order(cd, zeros);
}

std::vector<IntVector> expand_orbit(const IntVector& a, const CartanData& cd, Count cap) {
  if (!on_primary(a, cd)) throw Error(ErrorCode::NotOnEllipsoid, format(a));
  PointSet seen{a};
  std::vector<IntVector> work{a};
  while (!work.empty()) {
    IntVector x = std::move(work.back());
    work.pop_back();
    const IntVector h = h_vector(x, cd);
    for (int i = 0; i < cd.n; ++i) {
      if (h(i) == 0) continue;
      IntVector y = x;
      y(i) += h(i);
      if (seen.insert(y).second) {
        check_cap(seen, cap);
        work.push_back(std::move(y));
      }
    }
  }
  return sorted(seen);
}

std::vector<IntVector> sweep_orbit(const IntVector& a, const CartanData& cd, Count cap) {
  if (!on_primary(a, cd)) throw Error(ErrorCode::NotOnEllipsoid, format(a));
  PointSet seen{a};
  std::vector<IntVector> work{a};
  while (!work.empty()) {
    IntVector x = std::move(work.back());
    work.pop_back();
    const IntVector h = h_vector(x, cd);
    for (int i = 0; i < cd.n; ++i) {
      if (h(i) <= 0) continue;
      IntVector y = x;
      y(i) += h(i);
      if (seen.insert(y).second) {
        check_cap(seen, cap);
        work.push_back(std::move(y));
      }
    }
  }
  return sorted(seen);
}

Count Box::volume() const {
  Count v = 1;
  for (Eigen::Index i = 0; i < lower.size(); ++i) v = checked_mul(v, upper(i) - lower(i) + 1);
  return v;
}

Box primary_bounding_box(const CartanData& cd) {
  const Rational radius_sq = bilinear(cd.delta, cd.delta, cd);
  const RatMatrix gram_inv = exact_inverse(cd.gram.cast<Rational>());
  Box box{IntVector(cd.n), IntVector(cd.n)};
  for (int i = 0; i < cd.n; ++i) {
    const Rational r = radius_sq * gram_inv(i, i);
    const std::int64_t s = floor_sqrt(r);
    // widest integers t with (t - delta_i)^2 <= r
    std::int64_t lo = cd.delta(i).floor() - s - 1;
    std::int64_t hi = cd.delta(i).ceil() + s + 1;
    auto fits = [&](std::int64_t t) {
      const Rational u = Rational(t) - cd.delta(i);
      return u * u <= r;
    };
    while (!fits(lo)) ++lo;
    while (!fits(hi)) --hi;
    box.lower(i) = lo;
    box.upper(i) = hi;
  }
  return box;
}

std::vector<IntVector> scan_primary_box(const CartanData& cd, Count max_points) {
  const Box box = primary_bounding_box(cd);
  if (box.volume() > max_points) {
    throw Error(ErrorCode::CapExceeded, "bounding box has " + std::to_string(box.volume()) + " points");
  }
  const QuadForm form = primary_form(cd);
  std::vector<IntVector> found;
  IntVector x = box.lower;
  while (true) {
    if (form.value(x) == 0) found.push_back(x);
    int i = cd.n - 1;
    while (i >= 0 && x(i) == box.upper(i)) {
      x(i) = box.lower(i);
      --i;
    }
    if (i < 0) break;
    ++x(i);
  }
  return found;
}

}  // namespace weylell
