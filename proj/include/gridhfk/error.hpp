#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gridhfk {

enum class ErrorKind {
  NotAPermutation,
  SharedCell,
  TooSmall,
  TooLarge,
  SyntaxError,
  IllegalMove,
  InvalidDomain,
  PointNotCorner,
  NotAKnot,
  NotDivisible,
};

std::string_view to_string(ErrorKind kind) noexcept;

// NotDivisible means the computed homology contradicts the V^{n-l} tensor
// structure; everything else is bad input.
constexpr bool is_internal_alarm(ErrorKind kind) noexcept {
  return kind == ErrorKind::NotDivisible;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gridhfk
