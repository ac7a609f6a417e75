#include "selfsim/error.hpp"

namespace selfsim {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidSequence: return "InvalidSequence";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::TooShort: return "TooShort";
    case Errc::EqualSequences: return "EqualSequences";
    case Errc::UnequalOneCounts: return "UnequalOneCounts";
    case Errc::DegenerateCurve: return "DegenerateCurve";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::InvalidSlice: return "InvalidSlice";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::PairTooLong: return "PairTooLong";
    case Errc::NotInR: return "NotInR";
    case Errc::NotOnCurve: return "NotOnCurve";
    case Errc::WindowNotFound: return "WindowNotFound";
    case Errc::NoIntersectionWithR: return "NoIntersectionWithR";
    case Errc::InconsistentOverlap: return "InconsistentOverlap";
  }
  return "Unknown";
}

bool is_numerical_failure(Errc code) {
  return code == Errc::WindowNotFound || code == Errc::NoIntersectionWithR ||
         code == Errc::InconsistentOverlap;
}

}  // namespace selfsim
