#ifndef WEYLELL_REPORT_HPP
#define WEYLELL_REPORT_HPP

// Serialization of results for the command-line tool. Rationals are written
// as "p/q" strings and counts beyond 2^53 - 1 as decimal strings.

#include <string>
#include <vector>

#include "json.hpp"
#include "weylell/diophantine.hpp"
#include "weylell/order.hpp"
#include "weylell/verify.hpp"

namespace weylell::report {

using Json = nlohmann::ordered_json;

Json vector_json(const IntVector& v);
Json count_json(Count c);
Json rational_json(const Rational& q);

Json info_json(const CartanData& cd);
Json quadform_json(const QuadForm& form, const CartanData& cd, std::string_view which);
Json orbits_json(const CartanData& cd, const std::vector<OrbitRecord>& orbits);
Json poset_json(const Poset& poset);
Json realize_json(const WeylElement& w, const CartanData& cd);
Json reduced_words_json(const ReducedWordSet& words);
Json verification_json(const CartanData& cd, const std::vector<CheckResult>& results);

/// Header "h;minimal;size", one row per orbit, vectors comma-joined.
std::string orbits_csv(const std::vector<OrbitRecord>& orbits);

std::string info_text(const CartanData& cd);
std::string orbits_text(const std::vector<OrbitRecord>& orbits);
std::string verification_text(const std::vector<CheckResult>& results);

/// 1-based words for display: [0,1,0] -> "1,2,1".
std::string word_text(const std::vector<int>& word);

}  // namespace weylell::report

#endif  // WEYLELL_REPORT_HPP
