#pragma once

#include <array>
#include <optional>
#include <span>
#include <variant>

#include "porism/projective.hpp"

namespace porism {

/// Nondegenerate conic X^T A X = 0 with A symmetric, stored as the primitive
/// integer representative (same canonicalization as ProjMap).
class Conic {
 public:
  /// Throws InvalidConfiguration if `a` is not symmetric and DegenerateConic
  /// if det(a) == 0.
  explicit Conic(const Mat3& a);

  /// Upper-triangle entries a11 a12 a13 a22 a23 a33.
  static Conic from_coefficients(const Scalar& a11, const Scalar& a12, const Scalar& a13,
                                 const Scalar& a22, const Scalar& a23, const Scalar& a33);
  /// x1^2 + x2^2 - x3^2, the unit circle.
  static Conic unit_circle();

  const Mat3& matrix() const { return a_; }
  std::string str() const { return ProjMap(a_).str(); }

  friend bool operator==(const Conic&, const Conic&) = default;

 private:
  Mat3 a_;
};

/// Thrown by conic_through_five_points when the unique conic through the
/// points is a line pair; the quadratic form is attached.
class DegenerateConicError : public GeometryError {
 public:
  explicit DegenerateConicError(Mat3 form)
      : GeometryError(ErrorCode::DegenerateConic, "the five points lie on a degenerate conic"),
        form_(std::move(form)) {}
  const Mat3& form() const { return form_; }

 private:
  Mat3 form_;
};

struct Secant {
  HomPoint r;
  HomPoint s;
};
struct SecantIrrational {
  Scalar discriminant;
};
struct Tangent {
  HomPoint r;
};
struct Missing {};

using LinePosition = std::variant<Secant, SecantIrrational, Tangent, Missing>;

/// X^T A Y on the given representatives. Not scale invariant.
Scalar bilinear(const Conic& c, const Vec3& x, const Vec3& y);
Scalar bilinear(const Conic& c, const HomPoint& x, const HomPoint& y);
/// X^T A X on the given representative. Only its sign pattern and zero-ness
/// are meaningful projectively; use on_conic for predicates.
Scalar eval(const Conic& c, const Vec3& x);
Scalar eval(const Conic& c, const HomPoint& x);
bool on_conic(const Conic& c, const HomPoint& x);

HomLine polar(const Conic& c, const HomPoint& p);
HomPoint pole(const Conic& c, const HomLine& l);
/// Tangent line at a point of the conic. Throws PointNotOnConic.
HomLine tangent_at(const Conic& c, const HomPoint& p);

LinePosition line_position(const Conic& c, const HomLine& l);
bool is_secant(const LinePosition& p);

/// The other intersection of l with c, given the known intersection x.
/// Equals x iff l is tangent at x.
HomPoint second_intersection(const Conic& c, const HomPoint& x, const HomLine& l);

/// Point of c on the line through b and the pencil point at parameter t.
/// For b off the ideal line the pencil is parametrized by slope: the line
/// through b with direction (1, t, 0). `t == nullopt` is the vertical line.
HomPoint rational_point(const Conic& c, const HomPoint& b, const std::optional<Scalar>& t);

/// Conic (possibly degenerate) through five points, as a quadratic form.
/// Throws AmbiguousConic if the points do not determine a unique conic.
Mat3 quadric_through_five_points(std::span<const HomPoint, 5> pts);
/// Throws DegenerateConicError (with the form attached) or AmbiguousConic.
Conic conic_through_five_points(std::span<const HomPoint, 5> pts);

/// Conjugate of p on l: the meet of l with the polar of p.
HomPoint conjugate_on_line(const Conic& c, const HomLine& l, const HomPoint& p);

/// True iff a11 == a22 != 0 and a12 == 0, i.e. a circle in the x3 = 1 chart.
bool is_circle(const Conic& c);
HomLine radical_axis(const Conic& c1, const Conic& c2);

/// Dual conic with matrix A^{-1} (up to scale).
Conic dualize(const Conic& c);

/// Circle (x - a1)^2 + (y - a2)^2 = r^2 written as <(x1-a1x3, x2-a2x3, r x3), .> = 0.
Conic bundle_member(const Scalar& a1, const Scalar& a2, const Scalar& r);

/// A + mu l l^T. Agrees with c on every point of l.
Conic pencil_member(const Conic& c, const HomLine& l, const Scalar& mu);

/// True iff the restrictions of the two quadratic forms to l are proportional,
/// i.e. both conics cut l in the same (real or complex) point pair.
bool same_trace_on_line(const Conic& c, const Conic& d, const HomLine& l);

/// Small-height search for a rational point on c.
std::optional<HomPoint> find_rational_point(const Conic& c, int height = 6);

}  // namespace porism
