#include "porism/classic.hpp"

#include <optional>

namespace porism {

namespace {

void check_on_carrier(const Carrier& carrier, std::span<const HomPoint> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const HomPoint& v = vertices[i];
    bool ok = false;
    if (const auto* lp = std::get_if<LinePair>(&carrier)) {
      ok = incident(v, (i % 2 == 0) ? lp->first : lp->second);
    } else {
      ok = on_conic(std::get<Conic>(carrier), v);
    }
    if (!ok) {
      fail(ErrorCode::InvalidConfiguration,
           "vertex A" + std::to_string(i + 1) + " " + v.str() + " is off its carrier");
    }
  }
}

HomLine side(std::span<const HomPoint> v, std::size_t i) {
  const HomPoint& a = v[i % v.size()];
  const HomPoint& b = v[(i + 1) % v.size()];
  if (a == b) {
    fail(ErrorCode::DegenerateHexagon, "vertices " + std::to_string(i % v.size() + 1) + " and " +
                                           std::to_string((i + 1) % v.size() + 1) + " coincide");
  }
  return join(a, b);
}

// Common line of three collinear points (some may coincide).
HomLine line_through(std::span<const HomPoint> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] != pts[j]) return join(pts[i], pts[j]);
    }
  }
  fail(ErrorCode::DegenerateHexagon, "all intersection points coincide");
}

HomPoint step_to_line(const HomPoint& from, const HomPoint& through, const HomLine& target) {
  if (from == through) fail(ErrorCode::DegenerateStart, "vertex falls on an intersection point");
  const HomLine l = join(from, through);
  if (l == target) fail(ErrorCode::DegenerateStart, "side coincides with a carrier line");
  return meet(l, target);
}

}  // namespace

PascalPoints pascal_points(const Carrier& carrier, std::span<const HomPoint, 6> hexagon) {
  check_on_carrier(carrier, hexagon);
  std::array<std::optional<HomPoint>, 3> pts;
  for (std::size_t i = 0; i < 3; ++i) {
    const HomLine a = side(hexagon, i);
    const HomLine b = side(hexagon, i + 3);
    if (a == b) fail(ErrorCode::DegenerateHexagon, "opposite sides coincide");
    pts[i] = meet(a, b);
  }
  PascalPoints out{{*pts[0], *pts[1], *pts[2]}, 0};
  out.certificate = Mat3::from_rows(pts[0]->coords(), pts[1]->coords(), pts[2]->coords()).det();
  return out;
}

std::array<HomPoint, 6> pappus_regenerate(const LinePair& lines,
                                          std::span<const HomPoint, 6> hexagon,
                                          const HomPoint& a1) {
  const auto pp = pascal_points(lines, hexagon);
  if (!pp.collinear()) fail(ErrorCode::InvalidConfiguration, "Pappus points are not collinear");
  const HomLine axis = line_through(pp.points);
  if (!incident(a1, lines.first)) {
    fail(ErrorCode::PointNotOnLine, a1.str() + " is not on the first carrier line");
  }
  if (incident(a1, axis) || incident(a1, lines.second)) {
    fail(ErrorCode::DegenerateStart, "start lies on the Pappus line or the second carrier");
  }
  std::vector<HomPoint> v{a1};
  for (std::size_t i = 0; i < 5; ++i) {
    const HomLine& target = (i % 2 == 0) ? lines.second : lines.first;
    v.push_back(step_to_line(v.back(), pp.points[i % 3], target));
  }
  if (v[5] == v[0] || !incident(pp.points[2], join(v[5], v[0]))) {
    fail(ErrorCode::InternalInvariant, "regenerated Pappus hexagon does not close");
  }
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

std::array<HomPoint, 6> pascal_regenerate(const Conic& c, std::span<const HomPoint, 6> hexagon,
                                          const HomPoint& a1) {
  const auto pp = pascal_points(c, hexagon);
  if (!pp.collinear()) fail(ErrorCode::InvalidConfiguration, "Pascal points are not collinear");
  const HomLine axis = line_through(pp.points);
  if (!on_conic(c, a1)) fail(ErrorCode::PointNotOnConic, a1.str() + " is not on the conic");
  if (incident(a1, axis)) fail(ErrorCode::DegenerateStart, "start lies on the Pascal line");
  std::vector<HomPoint> v{a1};
  for (std::size_t i = 0; i < 5; ++i) {
    const HomPoint& p = pp.points[i % 3];
    if (p == v.back()) fail(ErrorCode::DegenerateStart, "vertex falls on an intersection point");
    v.push_back(second_intersection(c, v.back(), join(v.back(), p)));
  }
  if (v[5] == v[0] || !incident(pp.points[2], join(v[5], v[0]))) {
    fail(ErrorCode::InternalInvariant, "regenerated Pascal hexagon does not close");
  }
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

std::array<HomPoint, 4> scissors_regenerate(const LinePair& lines,
                                            std::span<const HomPoint, 4> quad,
                                            std::span<const HomPoint, 4> p, const HomPoint& a1) {
  check_on_carrier(lines, quad);
  for (std::size_t i = 0; i < 4; ++i) {
    if (!incident(p[i], side(quad, i))) {
      fail(ErrorCode::InvalidConfiguration, "P" + std::to_string(i + 1) + " is not on its side");
    }
  }
  const HomLine axis = line_through(p);
  for (const auto& x : p) {
    if (!incident(x, axis)) fail(ErrorCode::NotCollinear, "intersection points are not collinear");
  }
  if (!incident(a1, lines.first)) {
    fail(ErrorCode::PointNotOnLine, a1.str() + " is not on the first carrier line");
  }
  if (incident(a1, axis) || incident(a1, lines.second)) {
    fail(ErrorCode::DegenerateStart, "start lies on the axis or the second carrier");
  }
  std::vector<HomPoint> v{a1};
  for (std::size_t i = 0; i < 3; ++i) {
    const HomLine& target = (i % 2 == 0) ? lines.second : lines.first;
    v.push_back(step_to_line(v.back(), p[i], target));
  }
  if (v[3] == v[0] || !incident(p[3], join(v[3], v[0]))) {
    fail(ErrorCode::InternalInvariant, "regenerated Scissors quadrilateral does not close");
  }
  return {v[0], v[1], v[2], v[3]};
}

AffineRelation affine_relation(const HomLine& axis, std::span<const HomPoint> before,
                               std::span<const HomPoint> after) {
  if (before.size() != after.size() || before.size() < 2) return AffineRelation::None;
  // Rows e_i, e_j, axis form a map sending the axis to x3 = 0.
  Mat3 t;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      Vec3 ei{0, 0, 0}, ej{0, 0, 0};
      ei[i] = 1;
      ej[j] = 1;
      const Mat3 cand = Mat3::from_rows(ei, ej, axis.coords());
      if (!cand.det().is_zero()) {
        t = cand;
        i = j = 3;
      }
    }
  }
  using Pt = std::array<Scalar, 2>;
  const auto chart = [&](const HomPoint& x) -> std::optional<Pt> {
    const Vec3 y = t * x.coords();
    if (y[2].is_zero()) return std::nullopt;
    return Pt{y[0] / y[2], y[1] / y[2]};
  };
  std::vector<Pt> a, b;
  for (std::size_t i = 0; i < before.size(); ++i) {
    const auto pa = chart(before[i]);
    const auto pb = chart(after[i]);
    if (!pa || !pb) return AffineRelation::None;
    a.push_back(*pa);
    b.push_back(*pb);
  }
  // after = k * before + shift
  std::optional<Scalar> k;
  for (std::size_t i = 1; i < a.size() && !k; ++i) {
    for (std::size_t d = 0; d < 2 && !k; ++d) {
      const Scalar da = a[i][d] - a[0][d];
      if (!da.is_zero()) k = (b[i][d] - b[0][d]) / da;
    }
  }
  if (!k || k->is_zero()) return AffineRelation::None;
  const Pt shift{b[0][0] - *k * a[0][0], b[0][1] - *k * a[0][1]};
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t d = 0; d < 2; ++d) {
      if (b[i][d] != *k * a[i][d] + shift[d]) return AffineRelation::None;
    }
  }
  return *k == Scalar(1) ? AffineRelation::Translation : AffineRelation::Homothety;
}

}  // namespace porism
