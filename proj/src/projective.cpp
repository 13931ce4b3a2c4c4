#include "porism/projective.hpp"

#include <array>
#include <ostream>

namespace porism {

std::ostream& operator<<(std::ostream& os, const HomPoint& p) { return os << p.str(); }

std::ostream& operator<<(std::ostream& os, const HomLine& l) {
  const auto& c = l.coords();
  return os << "[" << c[0] << ", " << c[1] << ", " << c[2] << "]";
}

ProjMap::ProjMap(const Mat3& m) : m_(primitive(m)) {
  if (m.det().is_zero()) fail(ErrorCode::SingularMap, "projective map has zero determinant");
}

std::string ProjMap::str() const {
  std::string s = "[";
  for (std::size_t r = 0; r < 3; ++r) {
    s += (r ? "; " : "");
    for (std::size_t c = 0; c < 3; ++c) s += (c ? " " : "") + m_(r, c).str();
  }
  return s + "]";
}

HomLine join(const HomPoint& p, const HomPoint& q) {
  if (p == q) fail(ErrorCode::CoincidentPoints, "join of " + p.str() + " with itself");
  return HomLine(cross(p.coords(), q.coords()));
}

HomPoint meet(const HomLine& l, const HomLine& m) {
  if (l == m) fail(ErrorCode::CoincidentLines, "meet of " + l.str() + " with itself");
  return HomPoint(cross(l.coords(), m.coords()));
}

bool incident(const HomPoint& p, const HomLine& l) { return dot(p.coords(), l.coords()).is_zero(); }

bool collinear(const HomPoint& p, const HomPoint& q, const HomPoint& r) {
  return Mat3::from_rows(p.coords(), q.coords(), r.coords()).det().is_zero();
}

bool concurrent(const HomLine& l, const HomLine& m, const HomLine& n) {
  return Mat3::from_rows(l.coords(), m.coords(), n.coords()).det().is_zero();
}

Scalar bracket(const HomLine& l, const Vec3& x, const Vec3& y) {
  const auto& c = l.coords();
  const std::size_t k = !c[0].is_zero() ? 0 : (!c[1].is_zero() ? 1 : 2);
  return cross(x, y)[k] / c[k];
}

CrossRatio cross_ratio(const HomPoint& a, const HomPoint& b, const HomPoint& c,
                       const HomPoint& d) {
  const std::array<const HomPoint*, 4> pts{&a, &b, &c, &d};
  std::optional<HomLine> line;
  for (std::size_t i = 0; i < 4 && !line; ++i) {
    for (std::size_t j = i + 1; j < 4 && !line; ++j) {
      if (*pts[i] != *pts[j]) line = join(*pts[i], *pts[j]);
    }
  }
  if (!line) fail(ErrorCode::IndeterminateRatio, "all four points coincide");
  for (const auto* p : pts) {
    if (!incident(*p, *line)) fail(ErrorCode::NotCollinear, "cross-ratio of non-collinear points");
  }
  const auto br = [&](const HomPoint& x, const HomPoint& y) {
    return bracket(*line, x.coords(), y.coords());
  };
  const Scalar num = br(a, c) * br(b, d);
  const Scalar den = br(b, c) * br(a, d);
  if (den.is_zero()) {
    if (num.is_zero()) fail(ErrorCode::IndeterminateRatio, "cross-ratio is 0/0");
    return CrossRatio::infinite();
  }
  return CrossRatio::finite(num / den);
}

HomPoint apply_point(const ProjMap& m, const HomPoint& p) {
  return HomPoint(m.matrix() * p.coords());
}

HomLine apply_line(const ProjMap& m, const HomLine& l) {
  // adj(M)^T is det(M) M^{-T}.
  return HomLine(m.matrix().adjugate().transpose() * l.coords());
}

ProjMap compose(const ProjMap& m2, const ProjMap& m1) { return ProjMap(m2.matrix() * m1.matrix()); }

ProjMap inverse(const ProjMap& m) { return ProjMap(m.matrix().adjugate()); }

bool is_identity(const ProjMap& m) {
  const auto& a = m.matrix();
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      if (r != c && !a(r, c).is_zero()) return false;
    }
  }
  return a(0, 0) == a(1, 1) && a(1, 1) == a(2, 2);
}

std::pair<HomPoint, HomPoint> points_on(const HomLine& l) {
  std::vector<HomPoint> cands;
  for (std::size_t k = 0; k < 3; ++k) {
    Vec3 e{0, 0, 0};
    e[k] = 1;
    const Vec3 p = cross(l.coords(), e);
    if (is_zero(p)) continue;
    HomPoint hp(p);
    for (const auto& q : cands) {
      if (q != hp) return {q, hp};
    }
    cands.push_back(hp);
  }
  fail(ErrorCode::InternalInvariant, "line " + l.str() + " has fewer than two points");
}

}  // namespace porism
