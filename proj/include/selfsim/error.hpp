#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace selfsim {

enum class Errc {
  InvalidSequence,
  LengthMismatch,
  TooShort,
  EqualSequences,
  UnequalOneCounts,
  DegenerateCurve,
  LimitExceeded,
  InvalidSlice,
  InvalidConfig,
  OutOfDomain,
  PairTooLong,
  NotInR,
  NotOnCurve,
  WindowNotFound,
  NoIntersectionWithR,
  InconsistentOverlap,
};

std::string_view to_string(Errc code);

// Numerical failures are distinguished from input validation failures so the
// command line tool can map them onto different exit codes.
bool is_numerical_failure(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace selfsim
