#ifndef WEYLELL_ERROR_HPP
#define WEYLELL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace weylell {

enum class ErrorCode {
  UnknownFamily,
  RankOutOfRange,
  DimensionMismatch,
  NotARoot,
  BadIndexSet,
  IndexOutOfRange,
  NotOnEllipsoid,
  NotASolution,
  CapExceeded,
  NotInMainOrbit,
  NotAMultiple,
  NotIntegral,
  Overflow,
  DivisionByZero,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// The single exception type of the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace weylell

#endif  // WEYLELL_ERROR_HPP
