#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace locus {

enum class Errc {
  InvalidArgument,
  NotSymmetric,
  NotPositiveDefinite,
  DimensionMismatch,
  ZeroVector,
  DegenerateTriangle,
  ZeroCoefficient,
  ZeroDirection,
  FocusCoincidence,
  NotAMember,
  NegativeCoefficient,
  NonPositiveCoefficient,
  ZeroTailVector,
  DegreeOverflow,
  DimensionNot2D,
  IoFailure,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the Errc kinds so
/// callers (and the CLI) can branch on the kind rather than the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace locus
