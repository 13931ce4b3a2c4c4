#pragma once

#include <optional>
#include <span>
#include <vector>

#include "porism/conic.hpp"

namespace porism {

/// The formula representative <P,P>_A I - 2 P (A P)^T of the reversion
/// about p, computed on p's canonical coordinates. Its square is exactly
/// <P,P>^2 I and M^T A M = <P,P>^2 A.
Mat3 reversion_formula(const Conic& c, const HomPoint& p);

/// Reversion phi_P extended to the plane: the harmonic homology with center
/// p and axis polar(c, p). Throws CenterOnConic.
ProjMap reversion_matrix(const Conic& c, const HomPoint& p);

/// phi_P(x) for x on the conic, computed as the second intersection of the
/// line xp. Falls back to the tangent case (returns x) when xp touches c.
HomPoint reversion_apply(const Conic& c, const HomPoint& p, const HomPoint& x);

/// Center P if m is (up to scale) the reversion about some P off c.
std::optional<HomPoint> is_reversion(const Conic& c, const ProjMap& m);

struct ThreeToOne {
  /// Coefficients of W = a U + b V on the canonical representatives.
  Scalar a;
  Scalar b;
  /// X = (2a<U,V> + b<V,V>) U - a<U,U> V, before canonicalization.
  Vec3 x_raw;
  HomPoint x;
};

/// The unique X on the line UVW with phi_X o phi_W o phi_V o phi_U = id.
/// Throws NotCollinear, CenterOnConic or CoincidentCenters.
ThreeToOne three_to_one_detailed(const Conic& c, const HomPoint& u, const HomPoint& v,
                                 const HomPoint& w);
HomPoint three_to_one(const Conic& c, const HomPoint& u, const HomPoint& v, const HomPoint& w);

/// phi_{P_n} o ... o phi_{P_1}; the first center acts first.
ProjMap compose_reversions(const Conic& c, std::span<const HomPoint> centers);

}  // namespace porism
