#include "porism/conic.hpp"

namespace porism {

Conic::Conic(const Mat3& a) : a_(primitive(a)) {
  if (!a.is_symmetric()) fail(ErrorCode::InvalidConfiguration, "conic matrix is not symmetric");
  if (a.det().is_zero()) fail(ErrorCode::DegenerateConic, "conic matrix is singular");
}

Conic Conic::from_coefficients(const Scalar& a11, const Scalar& a12, const Scalar& a13,
                               const Scalar& a22, const Scalar& a23, const Scalar& a33) {
  return Conic(Mat3({a11, a12, a13, a12, a22, a23, a13, a23, a33}));
}

Conic Conic::unit_circle() { return Conic(Mat3::diagonal(1, 1, -1)); }

Scalar bilinear(const Conic& c, const Vec3& x, const Vec3& y) { return dot(x, c.matrix() * y); }
Scalar bilinear(const Conic& c, const HomPoint& x, const HomPoint& y) {
  return bilinear(c, x.coords(), y.coords());
}
Scalar eval(const Conic& c, const Vec3& x) { return bilinear(c, x, x); }
Scalar eval(const Conic& c, const HomPoint& x) { return eval(c, x.coords()); }
bool on_conic(const Conic& c, const HomPoint& x) { return eval(c, x).is_zero(); }

HomLine polar(const Conic& c, const HomPoint& p) { return HomLine(c.matrix() * p.coords()); }

HomPoint pole(const Conic& c, const HomLine& l) {
  return HomPoint(c.matrix().adjugate() * l.coords());
}

HomLine tangent_at(const Conic& c, const HomPoint& p) {
  if (!on_conic(c, p)) fail(ErrorCode::PointNotOnConic, p.str() + " is not on the conic");
  return polar(c, p);
}

LinePosition line_position(const Conic& c, const HomLine& l) {
  const auto [px, py] = points_on(l);
  const Vec3& x = px.coords();
  const Vec3& y = py.coords();
  const Scalar a = eval(c, x);
  const Scalar b = bilinear(c, x, y);
  const Scalar d = eval(c, y);
  // q(s, t) = a s^2 + 2 b s t + d t^2 on the point s x + t y.
  const Scalar disc = b * b - a * d;
  if (disc.sign() < 0) return Missing{};
  if (disc.is_zero()) {
    if (a.is_zero()) return Tangent{px};
    return Tangent{HomPoint((-b) * x + a * y)};
  }
  if (!disc.is_square()) return SecantIrrational{disc};
  if (a.is_zero()) return Secant{px, HomPoint(d * x - Scalar(2) * b * y)};
  const Scalar root = disc.sqrt();
  return Secant{HomPoint((-root - b) * x + a * y), HomPoint((root - b) * x + a * y)};
}

bool is_secant(const LinePosition& p) {
  return std::holds_alternative<Secant>(p) || std::holds_alternative<SecantIrrational>(p);
}

HomPoint second_intersection(const Conic& c, const HomPoint& x, const HomLine& l) {
  if (!on_conic(c, x)) fail(ErrorCode::PointNotOnConic, x.str() + " is not on the conic");
  if (!incident(x, l)) fail(ErrorCode::PointNotOnLine, x.str() + " is not on " + l.str());
  const auto [p, q] = points_on(l);
  const HomPoint& y = (p == x) ? q : p;
  // With q(x) = 0 the restricted form is t (2 b s + d t); the other root is (d, -2b).
  const Scalar b = bilinear(c, x.coords(), y.coords());
  const Scalar d = eval(c, y.coords());
  return HomPoint(d * x.coords() - Scalar(2) * b * y.coords());
}

HomPoint rational_point(const Conic& c, const HomPoint& b, const std::optional<Scalar>& t) {
  if (!on_conic(c, b)) fail(ErrorCode::PointNotOnConic, b.str() + " is not on the conic");
  // Pencil line m not through b, spanned by e (t = 0) and f (t = infinity).
  Vec3 e{1, 0, 0};
  Vec3 f{0, 1, 0};
  if (b[2].is_zero()) {
    if (!b[0].is_zero()) {
      e = {0, 0, 1};
      f = {0, 1, 0};
    } else {
      e = {0, 0, 1};
      f = {1, 0, 0};
    }
  }
  const Vec3 z = t ? e + (*t) * f : f;
  const HomLine l(cross(b.coords(), z));
  return second_intersection(c, b, l);
}

Mat3 quadric_through_five_points(std::span<const HomPoint, 5> pts) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& p : pts) {
    const auto& [x, y, z] = p.coords();
    rows.push_back({x * x, x * y, y * y, x * z, y * z, z * z});
  }
  const auto ns = nullspace(std::move(rows), 6);
  if (ns.size() != 1) {
    fail(ErrorCode::AmbiguousConic,
         "the points lie on a " + std::to_string(ns.size()) + "-dimensional family of conics");
  }
  const auto& k = ns.front();
  const Scalar h(1, 2);
  return Mat3({k[0], h * k[1], h * k[3], h * k[1], k[2], h * k[4], h * k[3], h * k[4], k[5]});
}

Conic conic_through_five_points(std::span<const HomPoint, 5> pts) {
  Mat3 form = quadric_through_five_points(pts);
  if (form.det().is_zero()) throw DegenerateConicError(primitive(form));
  return Conic(form);
}

HomPoint conjugate_on_line(const Conic& c, const HomLine& l, const HomPoint& p) {
  if (!incident(p, l)) fail(ErrorCode::PointNotOnLine, p.str() + " is not on " + l.str());
  if (on_conic(c, p)) fail(ErrorCode::SelfConjugate, p.str() + " lies on the conic");
  return meet(polar(c, p), l);
}

bool is_circle(const Conic& c) {
  const auto& a = c.matrix();
  return a(0, 1).is_zero() && a(0, 0) == a(1, 1) && !a(0, 0).is_zero();
}

HomLine radical_axis(const Conic& c1, const Conic& c2) {
  if (!is_circle(c1)) fail(ErrorCode::NotACircle, c1.str());
  if (!is_circle(c2)) fail(ErrorCode::NotACircle, c2.str());
  const auto& a = c1.matrix();
  const auto& b = c2.matrix();
  // Normalized equation x^2 + y^2 + 2 u x + 2 v y + w.
  const Scalar du = a(0, 2) / a(0, 0) - b(0, 2) / b(0, 0);
  const Scalar dv = a(1, 2) / a(0, 0) - b(1, 2) / b(0, 0);
  const Scalar dw = a(2, 2) / a(0, 0) - b(2, 2) / b(0, 0);
  if (du.is_zero() && dv.is_zero()) fail(ErrorCode::ConcentricCircles, "circles share a center");
  return HomLine(Scalar(2) * du, Scalar(2) * dv, dw);
}

Conic dualize(const Conic& c) { return Conic(c.matrix().adjugate()); }

Conic bundle_member(const Scalar& a1, const Scalar& a2, const Scalar& r) {
  if (r.is_zero()) fail(ErrorCode::ZeroRadius, "bundle member with r = 0");
  return Conic::from_coefficients(1, 0, -a1, 1, -a2, a1 * a1 + a2 * a2 - r * r);
}

Conic pencil_member(const Conic& c, const HomLine& l, const Scalar& mu) {
  return Conic(c.matrix() + mu * Mat3::outer(l.coords(), l.coords()));
}

bool same_trace_on_line(const Conic& c, const Conic& d, const HomLine& l) {
  const auto [p, q] = points_on(l);
  const Vec3 fc{eval(c, p), bilinear(c, p, q), eval(c, q)};
  const Vec3 fd{eval(d, p), bilinear(d, p, q), eval(d, q)};
  return proportional(fc, fd);
}

std::optional<HomPoint> find_rational_point(const Conic& c, int height) {
  for (int x = 0; x <= height; ++x) {
    for (int y = -height; y <= height; ++y) {
      for (int z = -height; z <= height; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        HomPoint p(x, y, z);
        if (on_conic(c, p)) return p;
      }
    }
  }
  for (int u = 0; u <= height; ++u) {
    for (int v = -height; v <= height; ++v) {
      for (int w = -height; w <= height; ++w) {
        if (u == 0 && v == 0 && w == 0) continue;
        const auto pos = line_position(c, HomLine(u, v, w));
        if (const auto* s = std::get_if<Secant>(&pos)) return s->r;
        if (const auto* t = std::get_if<Tangent>(&pos)) return t->r;
      }
    }
  }
  return std::nullopt;
}

}  // namespace porism
