#pragma once

#include <array>
#include <span>
#include <variant>

#include "porism/conic.hpp"

namespace porism {

/// The degenerate conic l1 u l2 carrying a Pappus hexagon or Scissors
/// quadrilateral. Vertices with even index (A_1, A_3, ...) lie on `first`.
struct LinePair {
  HomLine first;
  HomLine second;
};

using Carrier = std::variant<LinePair, Conic>;

/// Intersections of opposite sides A1A2/A4A5, A2A3/A5A6, A3A4/A6A1 and the
/// determinant of their coordinates (zero iff collinear).
struct PascalPoints {
  std::array<HomPoint, 3> points;
  Scalar certificate;
  bool collinear() const { return certificate.is_zero(); }
};

/// Throws DegenerateHexagon if a side is undefined or opposite sides coincide,
/// InvalidConfiguration if a vertex is off its carrier.
PascalPoints pascal_points(const Carrier& carrier, std::span<const HomPoint, 6> hexagon);

/// Pappus porism: the hexagon through the same three points starting at
/// a1 on carrier.first. Throws DegenerateStart at the excluded positions.
std::array<HomPoint, 6> pappus_regenerate(const LinePair& lines,
                                          std::span<const HomPoint, 6> hexagon,
                                          const HomPoint& a1);

/// Pascal porism on a nondegenerate conic.
std::array<HomPoint, 6> pascal_regenerate(const Conic& c, std::span<const HomPoint, 6> hexagon,
                                          const HomPoint& a1);

/// Scissors porism: A_1, A_3 on lines.first, A_2, A_4 on lines.second and
/// P_i on side A_i A_{i+1}, all P_i on one line.
std::array<HomPoint, 4> scissors_regenerate(const LinePair& lines,
                                            std::span<const HomPoint, 4> quad,
                                            std::span<const HomPoint, 4> p, const HomPoint& a1);

enum class AffineRelation { Translation, Homothety, None };

/// Sends `axis` to the ideal line and tests whether `after` is the image of
/// `before` under a translation or homothety of the resulting affine plane.
AffineRelation affine_relation(const HomLine& axis, std::span<const HomPoint> before,
                               std::span<const HomPoint> after);

}  // namespace porism
