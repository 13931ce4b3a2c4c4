#pragma once

#include <doctest.h>

#include <array>
#include <ostream>

#include "porism/porism.hpp"

namespace porism {

inline std::ostream& operator<<(std::ostream& os, const ProjMap& m) { return os << m.str(); }
inline std::ostream& operator<<(std::ostream& os, const CrossRatio& r) { return os << r.str(); }

}  // namespace porism

namespace testing {

using namespace porism;

inline Scalar q(long p, long d = 1) { return Scalar(p, d); }

inline Mat3 rows(std::array<long, 9> e) {
  std::array<Scalar, 9> s;
  for (std::size_t i = 0; i < 9; ++i) s[i] = Scalar(e[i]);
  return Mat3(s);
}

inline const Conic& circle() {
  static const Conic c = Conic::unit_circle();
  return c;
}

// Rational point (1 - t^2, 2t, 1 + t^2) of the unit circle.
inline HomPoint half_angle(const Scalar& t) {
  return HomPoint(Scalar(1) - t * t, Scalar(2) * t, Scalar(1) + t * t);
}

// x1^2 + x2^2 - x3^2 written out by hand.
inline Scalar circle_form(const Vec3& x) { return x[0] * x[0] + x[1] * x[1] - x[2] * x[2]; }

inline Scalar circle_bilinear(const Vec3& x, const Vec3& y) {
  return x[0] * y[0] + x[1] * y[1] - x[2] * y[2];
}

// Second point of the unit circle on the line through X (on it) and P:
// X + sP with 2s<X,P> + s^2<P,P> = 0.
inline HomPoint chord_partner(const HomPoint& x, const HomPoint& p) {
  const Vec3& a = x.coords();
  const Vec3& b = p.coords();
  const Scalar pp = circle_bilinear(b, b);
  const Scalar xp = circle_bilinear(a, b);
  return HomPoint(pp * a - Scalar(2) * xp * b);
}

template <class Fn>
ErrorCode error_of(Fn&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.code();
  }
  FAIL("no GeometryError thrown");
  return ErrorCode::InternalInvariant;
}

}  // namespace testing
