#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace porism {

enum class ErrorCode {
  ZeroVector,
  SingularMap,
  CoincidentPoints,
  CoincidentLines,
  NotCollinear,
  IndeterminateRatio,
  PointNotOnConic,
  PointNotOnLine,
  SelfConjugate,
  DegenerateConic,
  AmbiguousConic,
  NotACircle,
  ConcentricCircles,
  ZeroRadius,
  CenterOnConic,
  CoincidentCenters,
  IdentityMap,
  UnclassifiableExactly,
  AlreadyClosing,
  SeedExhaustion,
  CenterNotOnClosingLine,
  NotSecant,
  IrrationalIntersections,
  NotTangent,
  TangentLine,
  NotTangentLine,
  DegenerateStart,
  DegenerateHexagon,
  InvalidConfiguration,
  EmptyScene,
  UnboundedElement,
  InternalInvariant,
};

std::string_view to_string(ErrorCode code);

/// Every precondition failure in the geometry layer is reported as a
/// GeometryError carrying a machine-checkable code.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw GeometryError(code, what);
}

}  // namespace porism
