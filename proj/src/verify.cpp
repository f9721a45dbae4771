#include "weylell/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "weylell/diophantine.hpp"
#include "weylell/ellipsoid.hpp"
#include "weylell/oracles.hpp"
#include "weylell/order.hpp"
#include "weylell/weyl_group.hpp"

namespace weylell {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skipped: return "SKIP";
    case CheckStatus::finding: return "NOTE";
  }
  return "?";
}

namespace {

class Suite {
 public:
  void check(std::string name, const std::function<std::string()>& body) {
    // body returns "" on success, otherwise a description of the failure
    try {
      std::string problem = body();
      results_.push_back({std::move(name), problem.empty() ? CheckStatus::pass : CheckStatus::fail, problem});
    } catch (const Error& e) {
      results_.push_back({std::move(name), CheckStatus::fail, e.what()});
    }
  }
  void skip(std::string name, std::string why) { results_.push_back({std::move(name), CheckStatus::skipped, std::move(why)}); }
  void note(std::string name, std::string what) { results_.push_back({std::move(name), CheckStatus::finding, std::move(what)}); }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

IntVector random_point(std::mt19937_64& rng, int n, int radius) {
  std::uniform_int_distribution<int> dist(-radius, radius);
  IntVector x(n);
  for (int i = 0; i < n; ++i) x(i) = dist(rng);
  return x;
}

}  // namespace

std::vector<CheckResult> run_verification(const CartanData& cd, const VerifyOptions& opt) {
  Suite suite;
  const Count order = weyl_order(cd);

  suite.check("cartan: form symmetry k_i A_ij = k_j A_ji", [&]() -> std::string {
    return cd.gram == cd.gram.transpose() ? "" : "gram matrix is not symmetric";
  });
  suite.check("cartan: A delta = 1", [&]() -> std::string {
    return RatVector(cd.cartan.cast<Rational>() * cd.delta) == RatVector::Ones(cd.n) ? "" : "A delta != 1";
  });
  suite.check("cartan: A^-1 A = I and det A", [&]() -> std::string {
    if (RatMatrix(cd.inverse * cd.cartan.cast<Rational>()) != RatMatrix::Identity(cd.n, cd.n)) return "inverse wrong";
    std::int64_t det = 1;
    for (const auto& c : cd.type.components) det *= oracle::classical_determinant(c);
    return det == cd.det ? "" : "det " + std::to_string(cd.det) + " vs catalog " + std::to_string(det);
  });
  suite.check("cartan: positive root count and grades", [&]() -> std::string {
    Count expected = 0;
    for (const auto& c : cd.type.components) expected += oracle::classical_root_count(c);
    if (static_cast<Count>(cd.roots.size()) != expected) return "root count " + std::to_string(cd.roots.size());
    for (const Root& r : cd.roots) {
      const bool simple = r.coords.sum() == 1;
      if (r.grade < 1 || (r.grade == 1) != simple) return "grade law fails at " + format(r.coords);
    }
    return "";
  });

  const QuadForm primary = primary_form(cd);
  const QuadForm secondary = secondary_form(cd);
  suite.check("ellipsoid: grade(alpha) alpha on primary quadric", [&]() -> std::string {
    for (const Root& r : cd.roots) {
      if (primary.value(IntVector(r.grade * r.coords)) != 0) return format(r.coords);
    }
    return "";
  });
  suite.check("ellipsoid: coordinate forms vs inner products on random points", [&]() -> std::string {
    std::mt19937_64 rng(20240611);
    for (int k = 0; k < opt.random_points; ++k) {
      const IntVector x = random_point(rng, cd.n, 10);
      const RatVector xr = x.cast<Rational>();
      const RatVector shifted = xr - Rational(2) * cd.delta;
      if (Rational(2 * primary.value(x)) != bilinear(xr, shifted, cd)) return "primary at " + format(x);
      if (Rational(secondary.value(x)) != -Rational(cd.det) * secondary_inner_product(xr, cd)) {
        return "secondary at " + format(x);
      }
    }
    return "";
  });

  std::vector<OrbitRecord> seeds;
  suite.check("diophantine: seeds are solutions with integral minimal vectors", [&]() -> std::string {
    seeds = orbit_seeds(cd, opt.threads);
    Count total_raw = static_cast<Count>(enumerate_secondary_nonneg(cd, opt.threads).size());
    for (const auto& s : seeds) {
      if (!on_secondary(s.h, cd) || !on_primary(s.minimal, cd)) return "bad seed " + format(s.h);
      if (h_vector(s.minimal, cd) != s.h) return "h(minimal) != h at " + format(s.h);
      if (order % s.size != 0) return "orbit size does not divide |W|";
    }
    if (static_cast<Count>(seeds.size()) > total_raw) return "more seeds than solutions";
    return "";
  });

  if (cd.type == parse_type("E8")) {
    suite.check("diophantine: E8 orbit count equals the published count", [&]() -> std::string {
      return static_cast<Count>(seeds.size()) == kPublishedE8OrbitCount
                 ? ""
                 : "enumeration finds " + std::to_string(seeds.size()) + " orbits";
    });
    suite.check("diophantine: E8 orbit sizes sum to the theta-series count", [&]() -> std::string {
      Count total = 0;
      for (const auto& s : seeds) total = checked_add(total, s.size);
      const Rational norm = bilinear(cd.delta, cd.delta, cd);
      const Count theta = oracle::e8_theta_coefficient(norm.to_integer() / 2);
      return total == theta ? "" : std::to_string(total) + " vs " + std::to_string(theta);
    });
  }

  const IntVector origin = IntVector::Zero(cd.n);
  if (order <= opt.orbit_cap) {
    suite.check("diophantine: main orbit has |W| points", [&]() -> std::string {
      const auto main = expand_orbit(origin, cd, opt.orbit_cap);
      return static_cast<Count>(main.size()) == order ? "" : std::to_string(main.size()) + " points";
    });
    suite.check("diophantine: main orbit is nonnegative, h nonzero, contains the root grades", [&]() -> std::string {
      const auto main = expand_orbit(origin, cd, opt.orbit_cap);
      std::set<IntVector, LexLess> set(main.begin(), main.end());
      for (const auto& x : main) {
        if ((x.array() < 0).any()) return "negative component at " + format(x);
        if ((h_vector(x, cd).array() == 0).any()) return "zero h component at " + format(x);
      }
      const IntVector two_delta = to_integral(RatVector(Rational(2) * cd.delta));
      if (!set.count(two_delta)) return "2 delta missing";
      for (const Root& r : cd.roots) {
        if (!set.count(IntVector(r.grade * r.coords)) || !set.count(IntVector(two_delta - r.grade * r.coords))) {
          return "grade image of " + format(r.coords) + " missing";
        }
      }
      if (cd.n <= 3) {
        const auto sums = oracle::distinct_root_sums(cd);
        for (const auto& x : main) {
          if (!sums.count(x)) return format(x) + " is not a sum of distinct positive roots";
        }
      }
      return "";
    });
  } else {
    suite.skip("diophantine: main orbit expansion", "|W| above the orbit cap");
  }

  const bool any_expandable =
      std::any_of(seeds.begin(), seeds.end(), [&](const OrbitRecord& s) { return s.size <= opt.orbit_cap; });
  if (any_expandable) {
    suite.check("diophantine: orbit size law and upward sweep", [&]() -> std::string {
      std::size_t checked = 0;
      for (const auto& s : seeds) {
        if (s.size > opt.orbit_cap) continue;
        const auto orbit = expand_orbit(s.minimal, cd, opt.orbit_cap);
        if (static_cast<Count>(orbit.size()) != s.size) return "size law fails at h=" + format(s.h);
        if (sweep_orbit(s.minimal, cd, opt.orbit_cap) != orbit) return "sweep differs at h=" + format(s.h);
        for (const auto& e : orbit) {
          if (!componentwise_le(s.minimal, e)) return "minimal vector not below " + format(e);
        }
        ++checked;
      }
      return checked > 0 ? "" : "no orbit expanded";
    });
  } else {
    suite.skip("diophantine: orbit size law and upward sweep", "every orbit is above the orbit cap");
  }

  const Box box = primary_bounding_box(cd);
  if (box.volume() <= opt.box_cap) {
    suite.check("diophantine: orbits partition the integral primary points", [&]() -> std::string {
      const auto scanned = scan_primary_box(cd, opt.box_cap);
      std::vector<IntVector> united;
      for (const auto& s : seeds) {
        const auto orbit = expand_orbit(s.minimal, cd, opt.orbit_cap);
        united.insert(united.end(), orbit.begin(), orbit.end());
      }
      std::sort(united.begin(), united.end(), LexLess{});
      if (std::adjacent_find(united.begin(), united.end()) != united.end()) return "orbits overlap";
      return united == scanned ? "" : std::to_string(united.size()) + " orbit points vs " + std::to_string(scanned.size()) + " scanned";
    });
  } else {
    suite.skip("diophantine: partition by box scan", "box has " + std::to_string(box.volume()) + " points");
  }

  if (order > opt.group_cap) {
    suite.skip("weyl_group / order suites", "|W| = " + std::to_string(order) + " above the group cap");
    return suite.take();
  }

  const GroupTable table = build_group_table(cd, opt.group_cap);
  suite.check("weyl_group: P and S bijections", [&]() -> std::string {
    std::set<IntVector, LexLess> ps, ss;
    for (std::size_t k = 0; k < table.size(); ++k) {
      const WeylElement& w = table.element(k);
      if (w.mat.transpose() * cd.gram * w.mat != cd.gram) return "form not preserved";
      const IntVector p = p_map(w, cd);
      const IntVector s = s_map(w, cd);
      if (p != table.p_vector(k)) return "table key differs from P(w)";
      if (s != h_vector(p, cd)) return "S(w) != 1 - A P(w)";
      ps.insert(p);
      ss.insert(s);
    }
    if (static_cast<Count>(ps.size()) != order || static_cast<Count>(ss.size()) != order) return "not injective";
    const auto main = expand_orbit(origin, cd, opt.orbit_cap);
    return std::vector<IntVector>(ps.begin(), ps.end()) == main ? "" : "P-image differs from the main orbit";
  });
  suite.check("weyl_group: star is a group law", [&]() -> std::string {
    if (table.size() > 200) return "";
    for (const auto& a : table.keys()) {
      if (star(origin, a, table) != a || star(a, origin, table) != a) return "identity law";
      bool has_inverse = false;
      for (const auto& b : table.keys()) {
        if (star(a, b, table).isZero()) has_inverse = true;
        for (const auto& c : std::vector<IntVector>{table.keys().front(), table.keys().back(), a}) {
          if (star(star(a, b, table), c, table) != star(a, star(b, c, table), table)) return "associativity";
        }
      }
      if (!has_inverse) return "no inverse for " + format(a);
    }
    return "";
  });
  suite.check("weyl_group: p_alpha_b is a nonzero integer", [&]() -> std::string {
    for (const Root& r : cd.roots) {
      for (const auto& b : table.keys()) p_alpha_b(r.coords, b, table);
    }
    return "";
  });

  const Poset primary_order = primary_poset(table);
  const Poset bruhat_subword = bruhat_from_subwords(table);
  const Poset bruhat_primary = bruhat_from_primary(table, cd.roots);
  suite.check("order: Bruhat implies componentwise", [&]() -> std::string {
    const Relation reach = reachability(bruhat_subword);
    for (std::size_t a = 0; a < table.size(); ++a) {
      for (std::size_t b = 0; b < table.size(); ++b) {
        if (reach.test(a, b) && !componentwise_le(table.p_vector(a), table.p_vector(b))) {
          return format(table.p_vector(a)) + " < " + format(table.p_vector(b));
        }
      }
    }
    return "";
  });
  suite.check("order: root-filtered primary order equals subword Bruhat order", [&]() -> std::string {
    return same_order(bruhat_primary, bruhat_subword) ? "" : "orders differ";
  });
  {
    const Poset literal = bruhat_from_primary(table, cd.roots, LinkScope::covers);
    const auto discrepancies = primary_discrepancies(primary_order, bruhat_subword);
    std::ostringstream os;
    os << discrepancies.size() << " primary cover(s) not Bruhat-comparable";
    for (const auto& [a, b] : discrepancies) os << " " << format(a) << "<" << format(b);
    os << "; cover-only filter " << (same_order(literal, bruhat_subword) ? "agrees with" : "differs from") << " Bruhat";
    suite.note("order: primary vs Bruhat", os.str());
  }
  suite.check("order: reduced words and first letters", [&]() -> std::string {
    std::size_t identities = 0;
    for (std::size_t k = 0; k < table.size(); ++k) {
      const WeylElement& w = table.element(k);
      if (coxeter_length(w, cd) != table.length(k)) return "length mismatch at " + format(table.p_vector(k));
      if ((s_map(w, cd).array() > 0).all()) ++identities;
      if (order <= opt.word_search_cap) {
        if (reduced_words(w, cd).length != table.length(k)) return "reduced word length at " + format(table.p_vector(k));
        std::set<int> firsts;
        for (const auto& word : oracle::reduced_words_by_search(w.mat, cd)) {
          if (!word.empty()) firsts.insert(word.front());
        }
        const auto letters = first_letters(w, cd);
        if (std::vector<int>(firsts.begin(), firsts.end()) != letters) return "first letters at " + format(table.p_vector(k));
      }
    }
    return identities == 1 ? "" : "S-vectors without negatives: " + std::to_string(identities);
  });
  return suite.take();
}

}  // namespace weylell
