#include "porism/random.hpp"

#include <algorithm>

#include "porism/reversion.hpp"

namespace porism::gen {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

Scalar scalar(Rng& rng, int height) {
  return Scalar(uniform(rng, -height, height), uniform(rng, 1, height));
}

Scalar nonzero_scalar(Rng& rng, int height) {
  for (;;) {
    Scalar s = scalar(rng, height);
    if (!s.is_zero()) return s;
  }
}

HomPoint point(Rng& rng, int height) {
  for (;;) {
    Vec3 v{uniform(rng, -height, height), uniform(rng, -height, height),
           uniform(rng, -height, height)};
    if (!is_zero(v)) return HomPoint(v);
  }
}

HomLine line(Rng& rng, int height) { return HomLine(point(rng, height).coords()); }

HomPoint point_off_conic(Rng& rng, const Conic& c, int height) {
  for (;;) {
    HomPoint p = point(rng, height);
    if (!on_conic(c, p)) return p;
  }
}

HomPoint point_on_line(Rng& rng, const HomLine& l, int height) {
  const auto [x, y] = points_on(l);
  for (;;) {
    const Scalar s = scalar(rng, height);
    const Scalar t = scalar(rng, height);
    if (s.is_zero() && t.is_zero()) continue;
    return HomPoint(s * x.coords() + t * y.coords());
  }
}

HomPoint point_on_line_off_conic(Rng& rng, const Conic& c, const HomLine& l, int height) {
  for (;;) {
    HomPoint p = point_on_line(rng, l, height);
    if (!on_conic(c, p)) return p;
  }
}

std::vector<HomPoint> distinct_points_on_line(Rng& rng, const Conic& c, const HomLine& l,
                                              std::size_t n, int height) {
  std::vector<HomPoint> out;
  while (out.size() < n) {
    HomPoint p = point_on_line_off_conic(rng, c, l, height);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

Mat3 invertible_matrix(Rng& rng, int height) {
  for (;;) {
    std::array<Scalar, 9> e;
    for (auto& x : e) x = uniform(rng, -height, height);
    Mat3 m(e);
    if (!m.det().is_zero()) return m;
  }
}

PointedConic pointed_conic(Rng& rng) {
  if (uniform(rng, 0, 1) == 0) {
    const Conic c = Conic::unit_circle();
    return {c, HomPoint(1, 0, 1)};
  }
  for (;;) {
    std::array<HomPoint, 5> pts{point(rng, 5), point(rng, 5), point(rng, 5), point(rng, 5),
                                point(rng, 5)};
    try {
      const Conic c = conic_through_five_points(pts);
      return {c, pts[0]};
    } catch (const GeometryError&) {
      continue;
    }
  }
}

HomPoint point_on_conic(Rng& rng, const PointedConic& pc, int height) {
  return rational_point(pc.conic, pc.base, scalar(rng, height));
}

HomLine rational_secant(Rng& rng, const PointedConic& pc) {
  for (;;) {
    const HomPoint a = point_on_conic(rng, pc);
    const HomPoint b = point_on_conic(rng, pc);
    if (a != b) return join(a, b);
  }
}

HomLine tangent_line(Rng& rng, const PointedConic& pc) {
  return tangent_at(pc.conic, point_on_conic(rng, pc));
}

HomLine missing_line(Rng& rng, const PointedConic& pc) {
  const int det_sign = pc.conic.matrix().det().sign();
  for (;;) {
    // On the chord XY, q(X + tY) = 2t<X,Y>; the points where q has the sign
    // of det(A) are interior and their polars miss the conic.
    const HomPoint x = point_on_conic(rng, pc);
    const HomPoint y = point_on_conic(rng, pc);
    if (x == y) continue;
    Scalar t = nonzero_scalar(rng).abs();
    if (bilinear(pc.conic, x, y).sign() != det_sign) t = -t;
    const HomLine l = polar(pc.conic, HomPoint(x.coords() + t * y.coords()));
    if (std::holds_alternative<Missing>(line_position(pc.conic, l))) return l;
  }
}

std::vector<HomPoint> closing_centers_on_line(Rng& rng, const Conic& c, const HomLine& l,
                                              std::size_t count) {
  if (count == 0 || count % 2 != 0) fail(ErrorCode::InvalidConfiguration, "count must be even");
  std::vector<HomPoint> out;
  for (std::size_t i = 0; i + 1 < count; ++i) out.push_back(point_on_line_off_conic(rng, c, l));
  const auto center = is_reversion(c, compose_reversions(c, out));
  if (!center) fail(ErrorCode::InternalInvariant, "odd collinear composite is not a reversion");
  out.push_back(*center);
  return out;
}

}  // namespace porism::gen
