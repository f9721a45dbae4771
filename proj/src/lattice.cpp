#include "weylell/lattice.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

#include "weylell/exact_linalg.hpp"

namespace weylell {

LatticeEnumerator::LatticeEnumerator(const RatMatrix& q, const Rational& bound, Options options)
    : bound_(bound), options_(options) {
  LdlFactor f = ldl_upper(q);
  d_ = std::move(f.d);
  mu_ = std::move(f.mu);
  if (options_.threads < 1) options_.threads = 1;
}

Rational LatticeEnumerator::offset(Eigen::Index level, const IntVector& z) const {
  Rational c(0);
  for (Eigen::Index j = level + 1; j < z.size(); ++j) {
    if (z(j) != 0) c += mu_(level, j) * Rational(z(j));
  }
  return c;
}

std::pair<std::int64_t, std::int64_t> LatticeEnumerator::range(Eigen::Index level, const Rational& c,
                                                               const Rational& remaining) const {
  // d (t + c)^2 <= remaining  <=>  (t + c)^2 <= r
  const Rational r = remaining / d_(level);
  const std::int64_t s = floor_sqrt(r);
  auto fits = [&](std::int64_t t) {
    const Rational u = Rational(t) + c;
    return u * u <= r;
  };
  std::int64_t lo = (-c).floor() - s - 1;
  std::int64_t hi = (-c).ceil() + s + 1;
  while (lo <= hi && !fits(lo)) ++lo;
  while (hi >= lo && !fits(hi)) --hi;
  if (options_.nonnegative) lo = std::max<std::int64_t>(lo, 0);
  return {lo, hi};
}

void LatticeEnumerator::descend(Eigen::Index level, IntVector& z, const Rational& remaining,
                                const Visitor& visit, std::size_t& nodes) const {
  ++nodes;
  if (level < 0) {
    visit(z, bound_ - remaining);
    return;
  }
  const Rational c = offset(level, z);
  const auto [lo, hi] = range(level, c, remaining);
  for (std::int64_t t = lo; t <= hi; ++t) {
    z(level) = t;
    const Rational u = Rational(t) + c;
    descend(level - 1, z, remaining - d_(level) * u * u, visit, nodes);
  }
  z(level) = 0;
}

void LatticeEnumerator::for_each(const Visitor& visit) const {
  IntVector z = IntVector::Zero(d_.size());
  nodes_ = 0;
  if (bound_ < Rational(0)) return;
  descend(d_.size() - 1, z, bound_, visit, nodes_);
}

std::vector<IntVector> LatticeEnumerator::on_level(const Rational& level) const {
  std::vector<IntVector> out;
  const Eigen::Index n = d_.size();
  if (bound_ < Rational(0) || n == 0) return out;
  auto collect = [&level](std::vector<IntVector>& sink) {
    return [&sink, &level](const IntVector& z, const Rational& value) {
      if (value == level) sink.push_back(z);
    };
  };

  const auto [lo, hi] = range(n - 1, Rational(0), bound_);
  const int workers = static_cast<int>(std::min<std::int64_t>(options_.threads, std::max<std::int64_t>(hi - lo + 1, 1)));
  std::vector<std::vector<IntVector>> partial(static_cast<std::size_t>(workers));
  std::vector<std::size_t> counts(static_cast<std::size_t>(workers), 0);
  auto work = [&, lo = lo, hi = hi](int w) {
    IntVector z = IntVector::Zero(n);
    const Visitor visit = collect(partial[static_cast<std::size_t>(w)]);
    // round-robin over the outermost coordinate
    for (std::int64_t t = lo + w; t <= hi; t += workers) {
      z(n - 1) = t;
      const Rational u = Rational(t);
      descend(n - 2, z, bound_ - d_(n - 1) * u * u, visit, counts[static_cast<std::size_t>(w)]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  nodes_ = 1;
  for (std::size_t w = 0; w < partial.size(); ++w) {
    nodes_ += counts[w];
    out.insert(out.end(), partial[w].begin(), partial[w].end());
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

}  // namespace weylell
