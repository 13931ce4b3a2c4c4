#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "porism/conic.hpp"

namespace porism::gen {

using Rng = std::mt19937_64;

/// p/q with |p| <= height and 1 <= q <= height.
Scalar scalar(Rng& rng, int height = 9);
Scalar nonzero_scalar(Rng& rng, int height = 9);
/// Integer coordinates in [-height, height], not all zero.
HomPoint point(Rng& rng, int height = 9);
HomLine line(Rng& rng, int height = 9);
HomPoint point_off_conic(Rng& rng, const Conic& c, int height = 9);
/// s X + t Y for the canonical basis of l, random s, t.
HomPoint point_on_line(Rng& rng, const HomLine& l, int height = 9);
HomPoint point_on_line_off_conic(Rng& rng, const Conic& c, const HomLine& l, int height = 9);
/// Distinct points on l, off c.
std::vector<HomPoint> distinct_points_on_line(Rng& rng, const Conic& c, const HomLine& l,
                                              std::size_t n, int height = 9);
Mat3 invertible_matrix(Rng& rng, int height = 4);

/// A conic with a known rational point.
struct PointedConic {
  Conic conic;
  HomPoint base;
};

/// Half the time the unit circle, otherwise the conic through five random
/// rational points (retrying degenerate draws).
PointedConic pointed_conic(Rng& rng);
HomPoint point_on_conic(Rng& rng, const PointedConic& pc, int height = 9);

/// Line through two rational points of the conic.
HomLine rational_secant(Rng& rng, const PointedConic& pc);
HomLine tangent_line(Rng& rng, const PointedConic& pc);
/// Polar of a random interior point: a line that misses the conic.
HomLine missing_line(Rng& rng, const PointedConic& pc);

/// 2n centers on l with the closing property: 2n - 1 random ones, then the
/// center of the reversion their composite equals.
std::vector<HomPoint> closing_centers_on_line(Rng& rng, const Conic& c, const HomLine& l,
                                              std::size_t count);

}  // namespace porism::gen
