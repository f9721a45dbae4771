#include "weylell/types.hpp"

#include <charconv>
#include <sstream>

namespace weylell {

IntVector to_integral(const RatVector& v) {
  IntVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i).to_integer();
  return out;
}

std::string join(const IntVector& v, std::string_view sep) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v(i);
  }
  return os.str();
}

std::string format(const IntVector& v) { return "(" + join(v) + ")"; }

std::string format(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v(i);
  }
  os << ')';
  return os.str();
}

IntVector parse_vector(std::string_view text) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return IntVector(0);
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view token = trim(text.substr(pos, next - pos));
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
      throw Error(ErrorCode::Parse, "bad integer '" + std::string(token) + "' in '" + std::string(text) + "'");
    }
    values.push_back(value);
    pos = next + 1;
  }
  IntVector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
  return v;
}

}  // namespace weylell
