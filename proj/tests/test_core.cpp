#include "support.hpp"

using namespace testing;

namespace {

// (a - c)(b - d) / ((b - c)(a - d)) on affine coordinates along the line.
Scalar affine_cross_ratio(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  return ((a - c) * (b - d)) / ((b - c) * (a - d));
}

Scalar x_of(const HomPoint& p) { return p[0] / p[2]; }

}  // namespace

TEST_CASE("scalar parses fractions and decimals exactly") {
  CHECK(Scalar::parse("-6/4") == q(-3, 2));
  CHECK(Scalar::parse("1.25") == q(5, 4));
  CHECK(Scalar::parse("7") == q(7));
  CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("abc"), std::invalid_argument);
  CHECK(q(9, 4).is_square());
  CHECK(q(9, 4).sqrt() == q(3, 2));
  CHECK_FALSE(q(2).is_square());
}

TEST_CASE("points are stored as primitive integers with a positive leading entry") {
  const HomPoint p(q(-1, 2), q(1), q(-3, 4));
  CHECK(p.coords() == Vec3{q(2), q(-4), q(3)});
  CHECK(HomPoint(0, -3, 6) == HomPoint(0, 1, -2));
  CHECK(error_of([] { HomPoint(0, 0, 0); }) == ErrorCode::ZeroVector);
}

TEST_CASE("join") {
  CHECK(join(HomPoint(1, 0, 1), HomPoint(-1, 0, 1)) == HomLine(0, 1, 0));
  CHECK(join(HomPoint(0, 0, 1), HomPoint(1, 1, 1)) == HomLine(1, -1, 0));
  CHECK(join(HomPoint(1, 0, 0), HomPoint(0, 1, 0)) == HomLine(0, 0, 1));
  CHECK(error_of([] { join(HomPoint(1, 2, 3), HomPoint(2, 4, 6)); }) ==
        ErrorCode::CoincidentPoints);
}

TEST_CASE("meet") {
  CHECK(meet(HomLine(0, 1, 0), HomLine(1, 0, -1)) == HomPoint(1, 0, 1));
  CHECK(meet(HomLine(0, 1, 0), HomLine(0, 0, 1)) == HomPoint(1, 0, 0));
  CHECK(meet(HomLine(1, 0, 0), HomLine(0, 1, 0)) == HomPoint(0, 0, 1));
  CHECK(error_of([] { meet(HomLine(1, 1, 1), HomLine(-2, -2, -2)); }) ==
        ErrorCode::CoincidentLines);
}

TEST_CASE("collinear") {
  CHECK(collinear(HomPoint(0, 0, 1), HomPoint(2, 0, 1), HomPoint(3, 0, 1)));
  CHECK_FALSE(collinear(HomPoint(0, 0, 1), HomPoint(2, 0, 1), HomPoint(0, 1, 1)));
  CHECK(collinear(HomPoint(1, 0, 0), HomPoint(0, 0, 1), HomPoint(5, 0, 1)));
  CHECK(concurrent(HomLine(1, 0, 0), HomLine(0, 1, 0), HomLine(1, 1, 0)));
}

TEST_CASE("cross-ratio against the affine formula") {
  const HomPoint a(1, 0, 1), b(-1, 0, 1);
  CHECK(cross_ratio(a, b, HomPoint(0, 0, 1), HomPoint(-1, 0, 5)) == CrossRatio::finite(q(2, 3)));
  CHECK(cross_ratio(a, b, HomPoint(2, 0, 1), HomPoint(3, 0, 1)) == CrossRatio::finite(q(2, 3)));
  CHECK(cross_ratio(a, b, a, HomPoint(-1, 0, 5)) == CrossRatio::finite(q(0)));
  CHECK(cross_ratio(a, b, b, HomPoint(3, 0, 1)).is_infinite());

  const std::array<HomPoint, 6> pts{HomPoint(1, 0, 1), HomPoint(-1, 0, 1), HomPoint(2, 0, 3),
                                    HomPoint(-7, 0, 2), HomPoint(5, 0, 1),  HomPoint(9, 0, -4)};
  for (std::size_t i = 0; i + 3 < pts.size(); ++i) {
    const auto& [p, r, s, t] = std::tie(pts[i], pts[i + 1], pts[i + 2], pts[i + 3]);
    CHECK(cross_ratio(p, r, s, t).value() ==
          affine_cross_ratio(x_of(p), x_of(r), x_of(s), x_of(t)));
  }
  CHECK(error_of([] {
          cross_ratio(HomPoint(0, 0, 1), HomPoint(1, 0, 1), HomPoint(0, 1, 1), HomPoint(2, 0, 1));
        }) == ErrorCode::NotCollinear);
}

TEST_CASE("cross-ratio with an ideal point is the limit of the affine formula") {
  // cr(a, b; c, inf) = (a - c) / (b - c).
  const CrossRatio cr = cross_ratio(HomPoint(3, 0, 1), HomPoint(1, 0, 1), HomPoint(0, 0, 1),
                                    HomPoint(1, 0, 0));
  CHECK(cr.value() == q(3));
}

TEST_CASE("projective maps") {
  const ProjMap flip(Mat3::diagonal(-1, -1, 1));
  CHECK(apply_point(flip, HomPoint(1, 0, 1)) == HomPoint(-1, 0, 1));
  CHECK(inverse(ProjMap(Mat3::diagonal(2, 3, 6))) == ProjMap(Mat3::diagonal(3, 2, 1)));
  CHECK(is_identity(ProjMap(Mat3::diagonal(7, 7, 7))));
  CHECK_FALSE(is_identity(ProjMap(Mat3::diagonal(1, 1, 2))));
  CHECK(error_of([] { ProjMap(rows({1, 2, 3, 2, 4, 6, 0, 0, 1})); }) == ErrorCode::SingularMap);

  // Adjugate oracle for the inverse.
  const Mat3 m = rows({2, 1, 0, 0, 1, 3, 1, 0, 1});
  CHECK(inverse(ProjMap(m)) == ProjMap(m.adjugate()));
  CHECK(m * m.adjugate() == m.det() * Mat3::identity());

  // Lines move by the inverse transpose so incidence survives.
  const ProjMap shear(rows({1, 2, 0, 0, 1, 0, 0, 0, 1}));
  const HomLine l = join(HomPoint(1, 1, 1), HomPoint(3, -2, 1));
  CHECK(incident(apply_point(shear, HomPoint(1, 1, 1)), apply_line(shear, l)));
  CHECK(compose(shear, flip) == ProjMap(shear.matrix() * flip.matrix()));
}
