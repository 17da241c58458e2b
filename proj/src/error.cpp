#include "gridhfk/error.hpp"

namespace gridhfk {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::SharedCell: return "SharedCell";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::IllegalMove: return "IllegalMove";
    case ErrorKind::InvalidDomain: return "InvalidDomain";
    case ErrorKind::PointNotCorner: return "PointNotCorner";
    case ErrorKind::NotAKnot: return "NotAKnot";
    case ErrorKind::NotDivisible: return "NotDivisible";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace gridhfk
