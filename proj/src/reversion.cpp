#include "porism/reversion.hpp"

namespace porism {

namespace {

void require_off_conic(const Conic& c, const HomPoint& p) {
  if (on_conic(c, p)) fail(ErrorCode::CenterOnConic, p.str() + " lies on the conic");
}

}  // namespace

Mat3 reversion_formula(const Conic& c, const HomPoint& p) {
  require_off_conic(c, p);
  const Vec3& v = p.coords();
  const Scalar s = eval(c, v);
#ifdef PORISM_MUTATION_REVERSION
  // Deliberately wrong sign, used only to check that the self-test catches it.
  return s * Mat3::identity() + Scalar(2) * Mat3::outer(v, c.matrix() * v);
#else
  return s * Mat3::identity() - Scalar(2) * Mat3::outer(v, c.matrix() * v);
#endif
}

ProjMap reversion_matrix(const Conic& c, const HomPoint& p) {
  return ProjMap(reversion_formula(c, p));
}

HomPoint reversion_apply(const Conic& c, const HomPoint& p, const HomPoint& x) {
  require_off_conic(c, p);
  if (!on_conic(c, x)) fail(ErrorCode::PointNotOnConic, x.str() + " is not on the conic");
  return second_intersection(c, x, join(x, p));
}

std::optional<HomPoint> is_reversion(const Conic& c, const ProjMap& m) {
  // For N = k(sI - 2PQ^T) with Q^T P = s the trace is ks, so N - tr(N) I is
  // the rank one matrix -2k P Q^T whose columns span P.
  const Mat3& n = m.matrix();
  const Mat3 k = n - n.trace() * Mat3::identity();
  for (std::size_t col = 0; col < 3; ++col) {
    const Vec3 v = k.col(col);
    if (is_zero(v)) continue;
    const HomPoint p(v);
    if (on_conic(c, p)) return std::nullopt;
    if (reversion_matrix(c, p) == m) return p;
    return std::nullopt;
  }
  return std::nullopt;
}

ThreeToOne three_to_one_detailed(const Conic& c, const HomPoint& u, const HomPoint& v,
                                 const HomPoint& w) {
  for (const auto* p : {&u, &v, &w}) require_off_conic(c, *p);
  if (u == v || v == w || u == w) {
    fail(ErrorCode::CoincidentCenters, "three_to_one needs pairwise distinct centers");
  }
  if (!collinear(u, v, w)) fail(ErrorCode::NotCollinear, "U, V, W are not collinear");

  // Solve W = aU + bV from the 2x2 minor with nonzero determinant.
  const Vec3& U = u.coords();
  const Vec3& V = v.coords();
  const Vec3& W = w.coords();
  Scalar a, b;
  bool solved = false;
  for (std::size_t i = 0; i < 3 && !solved; ++i) {
    for (std::size_t j = i + 1; j < 3 && !solved; ++j) {
      const Scalar d = U[i] * V[j] - U[j] * V[i];
      if (d.is_zero()) continue;
      a = (W[i] * V[j] - W[j] * V[i]) / d;
      b = (U[i] * W[j] - U[j] * W[i]) / d;
      solved = true;
    }
  }
  if (!solved) fail(ErrorCode::InternalInvariant, "U and V are proportional");

  const Scalar uu = eval(c, U);
  const Scalar uv = bilinear(c, U, V);
  const Scalar vv = eval(c, V);
  const Vec3 x = (Scalar(2) * a * uv + b * vv) * U - (a * uu) * V;

  const Scalar xx = eval(c, x);
  if (xx != uu * vv * eval(c, W)) {
    fail(ErrorCode::InternalInvariant, "<X,X> != <U,U><V,V><W,W>");
  }
  ThreeToOne out{a, b, x, HomPoint(x)};
  const ProjMap lhs = reversion_matrix(c, out.x);
  const ProjMap rhs = compose(reversion_matrix(c, w),
                              compose(reversion_matrix(c, v), reversion_matrix(c, u)));
  if (lhs != rhs) fail(ErrorCode::InternalInvariant, "M_X is not M_W M_V M_U");
  return out;
}

HomPoint three_to_one(const Conic& c, const HomPoint& u, const HomPoint& v, const HomPoint& w) {
  return three_to_one_detailed(c, u, v, w).x;
}

ProjMap compose_reversions(const Conic& c, std::span<const HomPoint> centers) {
  Mat3 acc = Mat3::identity();
  for (const auto& p : centers) {
    acc = primitive(reversion_formula(c, p) * acc);
  }
  return ProjMap(acc);
}

}  // namespace porism
