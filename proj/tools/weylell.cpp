// weylell: Weyl groups realized on the integral points of two ellipsoids.
//
// Exit codes: 0 success, 1 usage error, 2 computation error, 3 verification
// failure or disagreement between Bruhat constructions.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "weylell/diophantine.hpp"
#include "weylell/ellipsoid.hpp"
#include "weylell/order.hpp"
#include "weylell/report.hpp"
#include "weylell/verify.hpp"
#include "weylell/weyl_group.hpp"

namespace {

using namespace weylell;

constexpr int kUsage = 1;
constexpr int kComputation = 2;
constexpr int kVerification = 3;

struct Globals {
  std::optional<Count> cap;
  int threads = 1;
};

struct Args {
  std::string type;
  bool json = false;
  bool csv = false;
  bool expand = false;
  std::optional<std::string> word;
  std::optional<std::string> pvector;
  std::optional<std::string> vector;
  std::string method = "subword";
  std::optional<std::string> dot;
};

std::vector<int> parse_word(const std::string& text, const CartanData& cd) {
  const IntVector letters = parse_vector(text);
  std::vector<int> word;
  for (Eigen::Index k = 0; k < letters.size(); ++k) {
    if (letters(k) < 1 || letters(k) > cd.n) {
      throw Error(ErrorCode::IndexOutOfRange, "letter " + std::to_string(letters(k)) + " outside 1.." + std::to_string(cd.n));
    }
    word.push_back(static_cast<int>(letters(k) - 1));
  }
  return word;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownFamily:
    case ErrorCode::RankOutOfRange:
    case ErrorCode::Parse:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::BadIndexSet:
      return kUsage;
    default:
      return kComputation;
  }
}

int cmd_info(const Args& a) {
  const CartanData cd = build_cartan(a.type);
  if (a.json) {
    std::cout << report::info_json(cd).dump(2) << '\n';
  } else {
    std::cout << report::info_text(cd);
  }
  return 0;
}

int cmd_equation(const Args& a, bool secondary) {
  const CartanData cd = build_cartan(a.type);
  const QuadForm form = secondary ? secondary_form(cd) : primary_form(cd);
  if (a.json) {
    std::cout << report::quadform_json(form, cd, secondary ? "secondary" : "primary").dump(2) << '\n';
  } else {
    std::cout << form.equation(secondary ? 'h' : 'x') << '\n';
  }
  return 0;
}

int cmd_orbits(const Args& a, const Globals& g) {
  const CartanData cd = build_cartan(a.type);
  std::vector<OrbitRecord> orbits = orbit_seeds(cd, g.threads);
  if (a.expand) {
    const Count cap = g.cap.value_or(kDefaultOrbitCap);
    for (auto& o : orbits) o.elements = expand_orbit(o.minimal, cd, cap);
  }
  if (a.json) {
    std::cout << report::orbits_json(cd, orbits).dump(2) << '\n';
  } else if (a.csv) {
    std::cout << report::orbits_csv(orbits);
  } else {
    std::cout << report::orbits_text(orbits);
  }
  return 0;
}

int cmd_expand(const Args& a, const Globals& g) {
  const CartanData cd = build_cartan(a.type);
  const IntVector start = a.vector ? parse_vector(*a.vector) : IntVector::Zero(cd.n);
  if (start.size() != cd.n) throw Error(ErrorCode::DimensionMismatch, "--vector needs " + std::to_string(cd.n) + " entries");
  const auto orbit = expand_orbit(start, cd, g.cap.value_or(kDefaultOrbitCap));
  if (a.json) {
    report::Json out;
    out["type"] = to_string(cd.type);
    out["start"] = report::vector_json(start);
    out["size"] = report::count_json(static_cast<Count>(orbit.size()));
    report::Json elems = report::Json::array();
    for (const auto& e : orbit) elems.push_back(report::vector_json(e));
    out["elements"] = std::move(elems);
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& e : orbit) std::cout << join(e) << '\n';
  }
  return 0;
}

int cmd_realize(const Args& a) {
  const CartanData cd = build_cartan(a.type);
  const WeylElement w = word_to_element(parse_word(a.word.value_or(""), cd), cd);
  if (a.json) {
    std::cout << report::realize_json(w, cd).dump(2) << '\n';
    return 0;
  }
  std::cout << "word: " << report::word_text(w.word) << '\n';
  std::cout << "matrix:\n";
  for (int i = 0; i < cd.n; ++i) {
    std::cout << ' ';
    for (int j = 0; j < cd.n; ++j) std::cout << ' ' << w.mat(i, j);
    std::cout << '\n';
  }
  std::cout << "P: " << format(p_map(w, cd)) << '\n';
  std::cout << "S: " << format(s_map(w, cd)) << '\n';
  std::cout << "length: " << coxeter_length(w, cd) << '\n';
  return 0;
}

int cmd_reduced_words(const Args& a, const Globals& g) {
  const CartanData cd = build_cartan(a.type);
  WeylElement w;
  if (a.pvector) {
    const GroupTable table = build_group_table(cd, g.cap.value_or(kDefaultGroupCap));
    w = table.element(table.index_of(parse_vector(*a.pvector)));
  } else if (a.word) {
    w = word_to_element(parse_word(*a.word, cd), cd);
  } else {
    throw Error(ErrorCode::Parse, "reduced-words needs --word or --pvector");
  }
  const ReducedWordSet words = reduced_words(w, cd);
  if (a.json) {
    std::cout << report::reduced_words_json(words).dump(2) << '\n';
    return 0;
  }
  std::cout << "P: " << format(words.element) << '\n';
  std::cout << "length: " << words.length << '\n';
  std::cout << "count: " << words.words.size() << '\n';
  for (const auto& word : words.words) std::cout << report::word_text(word) << '\n';
  return 0;
}

int cmd_bruhat(const Args& a, const Globals& g) {
  const CartanData cd = build_cartan(a.type);
  const GroupTable table = build_group_table(cd, g.cap.value_or(kDefaultGroupCap));
  Poset result;
  int code = 0;
  if (a.method == "primary") {
    result = bruhat_from_primary(table, cd.roots);
  } else if (a.method == "subword") {
    result = bruhat_from_subwords(table);
  } else {
    const Poset from_primary = bruhat_from_primary(table, cd.roots);
    result = bruhat_from_subwords(table);
    if (from_primary.covers == result.covers && same_order(from_primary, result)) {
      std::cerr << "methods agree: " << result.covers.size() << " identical covers\n";
    } else {
      std::cerr << "methods disagree: primary " << from_primary.covers.size() << " covers, subword "
                << result.covers.size() << " covers\n";
      code = kVerification;
    }
  }
  if (a.dot) {
    std::ofstream out(*a.dot);
    if (!out) throw Error(ErrorCode::Parse, "cannot write " + *a.dot);
    out << emit_dot(result);
  }
  if (a.json) {
    std::cout << report::poset_json(result).dump(2) << '\n';
  } else if (!a.dot) {
    std::cout << emit_dot(result);
  }
  return code;
}

int cmd_verify(const Args& a, const Globals& g) {
  const CartanData cd = build_cartan(a.type);
  VerifyOptions options;
  options.threads = g.threads;
  if (g.cap) {
    options.group_cap = *g.cap;
    options.orbit_cap = *g.cap;
  }
  const auto results = run_verification(cd, options);
  if (a.json) {
    std::cout << report::verification_json(cd, results).dump(2) << '\n';
  } else {
    std::cout << report::verification_text(results);
  }
  for (const auto& r : results) {
    if (r.status == CheckStatus::fail) return kVerification;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl groups realized on the integral points of the primary and secondary ellipsoids"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Globals globals;
  Args args;
  app.add_option("--cap", globals.cap, "Override the enumeration/expansion cap")->check(CLI::PositiveNumber);
  app.add_option("--threads", globals.threads, "Worker threads for lattice enumeration")->check(CLI::PositiveNumber);

  auto add_type = [&args](CLI::App* sub) {
    sub->add_option("type", args.type, "Lie type, e.g. A3 or B2xG2")->required();
  };
  auto add_json = [&args](CLI::App* sub) { sub->add_flag("--json", args.json, "JSON output"); };

  auto* info = app.add_subcommand("info", "Cartan matrix, weights, delta, det A and |W|");
  add_type(info);
  add_json(info);

  auto* primary_eq = app.add_subcommand("primary-eq", "Integer equation of the primary ellipsoid");
  add_type(primary_eq);
  add_json(primary_eq);

  auto* secondary_eq = app.add_subcommand("secondary-eq", "Integer equation of the secondary ellipsoid (scaled by det A)");
  add_type(secondary_eq);
  add_json(secondary_eq);

  auto* orbits = app.add_subcommand("orbits", "Orbits of integral primary points: h, minimal vector, size");
  add_type(orbits);
  auto* orbits_json = orbits->add_flag("--json", args.json, "JSON output");
  orbits->add_flag("--csv", args.csv, "CSV output (h;minimal;size)")->excludes(orbits_json);
  orbits->add_flag("--expand", args.expand, "Include the element list of every orbit");

  auto* expand = app.add_subcommand("expand", "All points of the orbit through a primary solution");
  add_type(expand);
  add_json(expand);
  expand->add_option("--vector", args.vector, "Start point, comma separated (default: origin)");

  auto* realize = app.add_subcommand("realize", "Matrix, P-vector, S-vector and length of a word");
  add_type(realize);
  add_json(realize);
  realize->add_option("--word", args.word, "Simple reflections, 1-based, comma separated; empty for the identity")
      ->required()
      ->expected(0, 1);

  auto* reduced = app.add_subcommand("reduced-words", "All reduced expressions of an element");
  add_type(reduced);
  add_json(reduced);
  auto* word_opt = reduced->add_option("--word", args.word, "Element given by a word");
  reduced->add_option("--pvector", args.pvector, "Element given by its P-vector")->excludes(word_opt);

  auto* bruhat = app.add_subcommand("bruhat", "Bruhat order as a Hasse diagram");
  add_type(bruhat);
  add_json(bruhat);
  bruhat->add_option("--method", args.method, "primary, subword or both")
      ->check(CLI::IsMember({"primary", "subword", "both"}));
  bruhat->add_option("--dot", args.dot, "Write the DOT digraph to FILE");

  auto* verify = app.add_subcommand("verify", "Run the invariant suites applicable to the type");
  add_type(verify);
  add_json(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*info) return cmd_info(args);
    if (*primary_eq) return cmd_equation(args, false);
    if (*secondary_eq) return cmd_equation(args, true);
    if (*orbits) return cmd_orbits(args, globals);
    if (*expand) return cmd_expand(args, globals);
    if (*realize) return cmd_realize(args);
    if (*reduced) return cmd_reduced_words(args, globals);
    if (*bruhat) return cmd_bruhat(args, globals);
    if (*verify) return cmd_verify(args, globals);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kUsage;
}
