#include "porism/errors.hpp"

namespace porism {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::SingularMap: return "SingularMap";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::CoincidentLines: return "CoincidentLines";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::IndeterminateRatio: return "IndeterminateRatio";
    case ErrorCode::PointNotOnConic: return "PointNotOnConic";
    case ErrorCode::PointNotOnLine: return "PointNotOnLine";
    case ErrorCode::SelfConjugate: return "SelfConjugate";
    case ErrorCode::DegenerateConic: return "DegenerateConic";
    case ErrorCode::AmbiguousConic: return "AmbiguousConic";
    case ErrorCode::NotACircle: return "NotACircle";
    case ErrorCode::ConcentricCircles: return "ConcentricCircles";
    case ErrorCode::ZeroRadius: return "ZeroRadius";
    case ErrorCode::CenterOnConic: return "CenterOnConic";
    case ErrorCode::CoincidentCenters: return "CoincidentCenters";
    case ErrorCode::IdentityMap: return "IdentityMap";
    case ErrorCode::UnclassifiableExactly: return "UnclassifiableExactly";
    case ErrorCode::AlreadyClosing: return "AlreadyClosing";
    case ErrorCode::SeedExhaustion: return "SeedExhaustion";
    case ErrorCode::CenterNotOnClosingLine: return "CenterNotOnClosingLine";
    case ErrorCode::NotSecant: return "NotSecant";
    case ErrorCode::IrrationalIntersections: return "IrrationalIntersections";
    case ErrorCode::NotTangent: return "NotTangent";
    case ErrorCode::TangentLine: return "TangentLine";
    case ErrorCode::NotTangentLine: return "NotTangentLine";
    case ErrorCode::DegenerateStart: return "DegenerateStart";
    case ErrorCode::DegenerateHexagon: return "DegenerateHexagon";
    case ErrorCode::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorCode::EmptyScene: return "EmptyScene";
    case ErrorCode::UnboundedElement: return "UnboundedElement";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

}  // namespace porism
