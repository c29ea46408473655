#include "locus/errors.hpp"

namespace locus {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotPositiveDefinite: return "NotPositiveDefinite";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::DegenerateTriangle: return "DegenerateTriangle";
    case Errc::ZeroCoefficient: return "ZeroCoefficient";
    case Errc::ZeroDirection: return "ZeroDirection";
    case Errc::FocusCoincidence: return "FocusCoincidence";
    case Errc::NotAMember: return "NotAMember";
    case Errc::NegativeCoefficient: return "NegativeCoefficient";
    case Errc::NonPositiveCoefficient: return "NonPositiveCoefficient";
    case Errc::ZeroTailVector: return "ZeroTailVector";
    case Errc::DegreeOverflow: return "DegreeOverflow";
    case Errc::DimensionNot2D: return "DimensionNot2D";
    case Errc::IoFailure: return "IoFailure";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace locus
