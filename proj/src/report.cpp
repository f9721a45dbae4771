#include "weylell/report.hpp"

#include <iomanip>
#include <sstream>

#include "weylell/weyl_group.hpp"

namespace weylell::report {

namespace {

constexpr Count kMaxSafeInteger = (Count{1} << 53) - 1;

Json int_matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(vector_json(IntVector(m.row(i).transpose())));
  return rows;
}

Json word_json(const std::vector<int>& word) {
  Json out = Json::array();
  for (int i : word) out.push_back(i + 1);
  return out;
}

}  // namespace

Json vector_json(const IntVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json count_json(Count c) {
  if (c <= kMaxSafeInteger && c >= -kMaxSafeInteger) return Json(c);
  return Json(std::to_string(c));
}

Json rational_json(const Rational& q) { return Json(q.str()); }

Json info_json(const CartanData& cd) {
  Json delta = Json::array();
  for (Eigen::Index i = 0; i < cd.delta.size(); ++i) delta.push_back(rational_json(cd.delta(i)));
  Json out;
  out["type"] = to_string(cd.type);
  out["rank"] = cd.n;
  out["cartan"] = int_matrix_json(cd.cartan);
  out["weights"] = vector_json(cd.weights);
  out["delta"] = delta;
  out["det"] = cd.det;
  out["weyl_order"] = count_json(weyl_order(cd));
  out["positive_roots"] = cd.roots.size();
  return out;
}

Json quadform_json(const QuadForm& form, const CartanData& cd, std::string_view which) {
  Json out;
  out["type"] = to_string(cd.type);
  out["form"] = std::string(which);
  out["equation"] = form.equation(which == "secondary" ? 'h' : 'x');
  out["hessian"] = int_matrix_json(form.hessian);
  out["linear"] = vector_json(form.linear);
  out["constant"] = form.constant;
  return out;
}

Json orbits_json(const CartanData& cd, const std::vector<OrbitRecord>& orbits) {
  Json list = Json::array();
  for (const auto& o : orbits) {
    Json rec;
    rec["h"] = vector_json(o.h);
    rec["minimal"] = vector_json(o.minimal);
    rec["size"] = count_json(o.size);
    if (o.elements) {
      Json elems = Json::array();
      for (const auto& e : *o.elements) elems.push_back(vector_json(e));
      rec["elements"] = std::move(elems);
    }
    list.push_back(std::move(rec));
  }
  Json out;
  out["type"] = to_string(cd.type);
  out["orbits"] = std::move(list);
  return out;
}

Json poset_json(const Poset& poset) {
  Json nodes = Json::array();
  for (const auto& v : poset.nodes) nodes.push_back(vector_json(v));
  Json covers = Json::array();
  for (auto [a, b] : poset.covers) covers.push_back(Json::array({a, b}));
  Json out;
  out["nodes"] = std::move(nodes);
  out["covers"] = std::move(covers);
  out["kind"] = std::string(to_string(poset.kind));
  return out;
}

Json realize_json(const WeylElement& w, const CartanData& cd) {
  Json out;
  out["type"] = to_string(cd.type);
  out["word"] = word_json(w.word);
  out["matrix"] = int_matrix_json(w.mat);
  out["p_vector"] = vector_json(p_map(w, cd));
  out["s_vector"] = vector_json(s_map(w, cd));
  out["length"] = coxeter_length(w, cd);
  return out;
}

Json reduced_words_json(const ReducedWordSet& words) {
  Json list = Json::array();
  for (const auto& w : words.words) list.push_back(word_json(w));
  Json out;
  out["p_vector"] = vector_json(words.element);
  out["length"] = words.length;
  out["count"] = words.words.size();
  out["words"] = std::move(list);
  return out;
}

Json verification_json(const CartanData& cd, const std::vector<CheckResult>& results) {
  Json checks = Json::array();
  for (const auto& r : results) {
    checks.push_back({{"name", r.name}, {"status", std::string(to_string(r.status))}, {"detail", r.detail}});
  }
  return Json{{"type", to_string(cd.type)}, {"checks", std::move(checks)}};
}

std::string orbits_csv(const std::vector<OrbitRecord>& orbits) {
  std::ostringstream os;
  os << "h;minimal;size\n";
  for (const auto& o : orbits) os << join(o.h) << ';' << join(o.minimal) << ';' << o.size << '\n';
  return os.str();
}

std::string info_text(const CartanData& cd) {
  std::ostringstream os;
  os << "type: " << to_string(cd.type) << '\n';
  os << "rank: " << cd.n << '\n';
  os << "cartan matrix:\n";
  for (int i = 0; i < cd.n; ++i) {
    os << ' ';
    for (int j = 0; j < cd.n; ++j) os << ' ' << std::setw(2) << cd.cartan(i, j);
    os << '\n';
  }
  os << "weights k: " << format(cd.weights) << '\n';
  os << "delta: " << format(cd.delta) << '\n';
  os << "det A: " << cd.det << '\n';
  os << "positive roots: " << cd.roots.size() << '\n';
  os << "|W|: " << weyl_order(cd) << '\n';
  return os.str();
}

std::string orbits_text(const std::vector<OrbitRecord>& orbits) {
  std::ostringstream os;
  os << orbits.size() << " orbit(s)\n";
  for (const auto& o : orbits) {
    os << "h=" << format(o.h) << " minimal=" << format(o.minimal) << " size=" << o.size << '\n';
    if (o.elements) {
      for (const auto& e : *o.elements) os << "  " << format(e) << '\n';
    }
  }
  return os.str();
}

std::string verification_text(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << '[' << to_string(r.status) << "] " << r.name;
    if (!r.detail.empty()) os << " -- " << r.detail;
    os << '\n';
  }
  return os.str();
}

std::string word_text(const std::vector<int>& word) {
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) os << (k ? "," : "") << word[k] + 1;
  return os.str();
}

}  // namespace weylell::report
