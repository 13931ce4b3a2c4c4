#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "porism/errors.hpp"
#include "porism/linalg.hpp"

namespace porism {

struct PointTag {};
struct LineTag {};

/// Nonzero homogeneous triple identified up to nonzero scale.
///
/// The stored coordinates are always the canonical representative: a
/// primitive integer vector whose first nonzero entry is positive. Equality
/// is therefore plain coordinate equality.
template <class Tag>
class Homogeneous {
 public:
  explicit Homogeneous(const Vec3& v) : c_(primitive(v)) {
    if (porism::is_zero(v)) fail(ErrorCode::ZeroVector, "homogeneous triple is all zero");
  }
  Homogeneous(const Scalar& a, const Scalar& b, const Scalar& c) : Homogeneous(Vec3{a, b, c}) {}

  const Vec3& coords() const { return c_; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  std::string str() const { return to_string(c_); }

  friend bool operator==(const Homogeneous&, const Homogeneous&) = default;

 private:
  Vec3 c_;
};

using HomPoint = Homogeneous<PointTag>;
using HomLine = Homogeneous<LineTag>;

std::ostream& operator<<(std::ostream& os, const HomPoint& p);
std::ostream& operator<<(std::ostream& os, const HomLine& l);

/// Invertible 3x3 map acting on points by M X and on lines by M^{-T} l.
class ProjMap {
 public:
  explicit ProjMap(const Mat3& m);

  static ProjMap identity() { return ProjMap(Mat3::identity()); }

  const Mat3& matrix() const { return m_; }
  std::string str() const;

  friend bool operator==(const ProjMap&, const ProjMap&) = default;

 private:
  Mat3 m_;
};

HomLine join(const HomPoint& p, const HomPoint& q);
HomPoint meet(const HomLine& l, const HomLine& m);
bool incident(const HomPoint& p, const HomLine& l);
bool collinear(const HomPoint& p, const HomPoint& q, const HomPoint& r);
bool concurrent(const HomLine& l, const HomLine& m, const HomLine& n);

/// A cross-ratio value in the projective line over Q: finite or infinite.
class CrossRatio {
 public:
  static CrossRatio finite(Scalar v) { return CrossRatio(std::move(v)); }
  static CrossRatio infinite() { return CrossRatio(); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Requires !is_infinite().
  const Scalar& value() const { return *value_; }
  std::string str() const { return value_ ? value_->str() : std::string("inf"); }

  friend bool operator==(const CrossRatio&, const CrossRatio&) = default;

 private:
  CrossRatio() = default;
  explicit CrossRatio(Scalar v) : value_(std::move(v)) {}
  std::optional<Scalar> value_;
};

/// cr(A,B;C,D) = ([A,C][B,D]) / ([B,C][A,D]) where [X,Y] is the bracket of
/// two points on the common line. Ideal points need no special handling.
/// Throws NotCollinear, or IndeterminateRatio when both brackets vanish.
CrossRatio cross_ratio(const HomPoint& a, const HomPoint& b, const HomPoint& c,
                       const HomPoint& d);

/// Alternating bilinear bracket of two points on the line l (l must contain both).
Scalar bracket(const HomLine& l, const Vec3& x, const Vec3& y);

HomPoint apply_point(const ProjMap& m, const HomPoint& p);
HomLine apply_line(const ProjMap& m, const HomLine& l);

/// compose(m2, m1) acts as m1 first, then m2.
ProjMap compose(const ProjMap& m2, const ProjMap& m1);
ProjMap inverse(const ProjMap& m);
bool is_identity(const ProjMap& m);

/// Two distinct points spanning l, chosen deterministically.
std::pair<HomPoint, HomPoint> points_on(const HomLine& l);

}  // namespace porism
