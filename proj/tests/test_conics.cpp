#include "support.hpp"

using namespace testing;

namespace {

Conic circle_at(long a1, long a2, long r2) {
  // (x - a1)^2 + (y - a2)^2 = r2, expanded by hand.
  return Conic::from_coefficients(1, 0, -a1, 1, -a2, a1 * a1 + a2 * a2 - r2);
}

}  // namespace

TEST_CASE("conic construction") {
  CHECK(Conic::unit_circle().matrix() == Mat3::diagonal(1, 1, -1));
  CHECK(Conic(Mat3::diagonal(-3, -3, 3)) == Conic::unit_circle());
  CHECK(error_of([] { Conic(Mat3::diagonal(1, 1, 0)); }) == ErrorCode::DegenerateConic);
  CHECK(error_of([] { Conic(rows({1, 2, 0, 0, 1, 0, 0, 0, -1})); }) ==
        ErrorCode::InvalidConfiguration);
}

TEST_CASE("evaluation and polarity on the unit circle") {
  CHECK(eval(circle(), HomPoint(1, 0, 1)) == q(0));
  CHECK(eval(circle(), HomPoint(0, 0, 1)) == q(-1));
  CHECK(eval(circle(), HomPoint(2, 0, 1)) == q(3));
  CHECK(polar(circle(), HomPoint(0, 0, 1)) == HomLine(0, 0, 1));
  CHECK(polar(circle(), HomPoint(2, 0, 1)) == HomLine(2, 0, -1));
  CHECK(polar(circle(), HomPoint(1, 0, 1)) == HomLine(1, 0, -1));
  CHECK(pole(circle(), HomLine(2, 0, -1)) == HomPoint(2, 0, 1));
  CHECK(tangent_at(circle(), HomPoint(3, 4, 5)) == HomLine(3, 4, -5));
  CHECK(error_of([] { tangent_at(circle(), HomPoint(0, 0, 1)); }) ==
        ErrorCode::PointNotOnConic);
}

TEST_CASE("line position") {
  const auto secant = line_position(circle(), HomLine(0, 1, 0));
  REQUIRE(std::holds_alternative<Secant>(secant));
  CHECK(std::get<Secant>(secant).r == HomPoint(1, 0, 1));
  CHECK(std::get<Secant>(secant).s == HomPoint(-1, 0, 1));

  const auto tangent = line_position(circle(), HomLine(0, 1, -1));
  REQUIRE(std::holds_alternative<Tangent>(tangent));
  CHECK(std::get<Tangent>(tangent).r == HomPoint(0, 1, 1));

  CHECK(std::holds_alternative<Missing>(line_position(circle(), HomLine(8, 0, -13))));
  // y = x meets the circle at (+-1/sqrt 2, +-1/sqrt 2).
  CHECK(std::holds_alternative<SecantIrrational>(line_position(circle(), HomLine(1, -1, 0))));
}

TEST_CASE("second intersection") {
  CHECK(second_intersection(circle(), HomPoint(1, 0, 1), HomLine(0, 1, 0)) == HomPoint(-1, 0, 1));
  CHECK(second_intersection(circle(), HomPoint(1, 0, 1), HomLine(1, 0, -1)) == HomPoint(1, 0, 1));
  CHECK(second_intersection(circle(), HomPoint(0, 1, 1),
                            join(HomPoint(0, 1, 1), HomPoint(1, 0, 1))) == HomPoint(1, 0, 1));
  // Chord oracle through the ideal point of the x-axis and through (2, 0).
  CHECK(second_intersection(circle(), HomPoint(3, 4, 5), join(HomPoint(3, 4, 5), HomPoint(1, 0, 0))) ==
        chord_partner(HomPoint(3, 4, 5), HomPoint(1, 0, 0)));
  CHECK(second_intersection(circle(), HomPoint(3, 4, 5), join(HomPoint(3, 4, 5), HomPoint(2, 0, 1))) ==
        chord_partner(HomPoint(3, 4, 5), HomPoint(2, 0, 1)));
  CHECK(error_of([] { second_intersection(circle(), HomPoint(0, 0, 1), HomLine(0, 1, 0)); }) ==
        ErrorCode::PointNotOnConic);
  CHECK(error_of([] { second_intersection(circle(), HomPoint(1, 0, 1), HomLine(0, 1, -1)); }) ==
        ErrorCode::PointNotOnLine);
}

TEST_CASE("rational points by slope") {
  const HomPoint b(-1, 0, 1);
  CHECK(rational_point(circle(), b, q(1)) == HomPoint(0, 1, 1));
  CHECK(rational_point(circle(), b, q(0)) == HomPoint(1, 0, 1));
  CHECK(rational_point(circle(), b, q(1, 2)) == HomPoint(3, 4, 5));
  // Slope t through (-1, 0) is the half-angle parameter t.
  for (long n = -5; n <= 5; ++n) {
    CHECK(rational_point(circle(), b, q(n, 3)) == half_angle(q(n, 3)));
  }
  CHECK(rational_point(circle(), b, std::nullopt) == b);
  CHECK(error_of([] { rational_point(circle(), HomPoint(0, 0, 1), q(1)); }) ==
        ErrorCode::PointNotOnConic);
}

TEST_CASE("conic through five points") {
  const std::array<HomPoint, 5> on_circle{HomPoint(1, 0, 1), HomPoint(-1, 0, 1), HomPoint(0, 1, 1),
                                          HomPoint(0, -1, 1), HomPoint(3, 4, 5)};
  CHECK(conic_through_five_points(on_circle) == Conic::unit_circle());

  const std::array<HomPoint, 5> four_collinear{HomPoint(0, 0, 1), HomPoint(1, 0, 1),
                                               HomPoint(2, 0, 1), HomPoint(3, 0, 1),
                                               HomPoint(0, 1, 1)};
  CHECK(error_of([&] { conic_through_five_points(four_collinear); }) == ErrorCode::AmbiguousConic);

  const std::array<HomPoint, 5> axes{HomPoint(0, 0, 1), HomPoint(1, 0, 1), HomPoint(2, 0, 1),
                                     HomPoint(0, 1, 1), HomPoint(0, 2, 1)};
  try {
    conic_through_five_points(axes);
    FAIL("expected a degenerate conic");
  } catch (const DegenerateConicError& e) {
    CHECK(e.code() == ErrorCode::DegenerateConic);
    // xy = 0 up to scale.
    CHECK(proportional(e.form(), rows({0, 1, 0, 1, 0, 0, 0, 0, 0})));
  }
}

TEST_CASE("conjugate on a line") {
  const HomLine axis(0, 1, 0);
  CHECK(conjugate_on_line(circle(), axis, HomPoint(2, 0, 1)) == HomPoint(1, 0, 2));
  CHECK(conjugate_on_line(circle(), axis, HomPoint(0, 0, 1)) == HomPoint(1, 0, 0));
  CHECK(conjugate_on_line(circle(), axis, HomPoint(3, 0, 1)) == HomPoint(1, 0, 3));
  CHECK(error_of([&] { conjugate_on_line(circle(), axis, HomPoint(1, 0, 1)); }) ==
        ErrorCode::SelfConjugate);
  CHECK(error_of([&] { conjugate_on_line(circle(), axis, HomPoint(0, 1, 1)); }) ==
        ErrorCode::PointNotOnLine);
}

TEST_CASE("radical axis") {
  CHECK(radical_axis(circle(), circle_at(4, 0, 4)) == HomLine(8, 0, -13));
  CHECK(radical_axis(circle(), circle_at(3, 0, 4)) == HomLine(1, 0, -1));
  CHECK(radical_axis(circle_at(1, 0, 1), circle_at(-1, 0, 1)) == HomLine(1, 0, 0));
  CHECK(error_of([] { radical_axis(circle(), Conic(Mat3::diagonal(1, 2, -1))); }) ==
        ErrorCode::NotACircle);
  CHECK(error_of([] { radical_axis(circle(), circle_at(0, 0, 4)); }) ==
        ErrorCode::ConcentricCircles);
  CHECK(is_circle(circle_at(2, -3, 5)));
}

TEST_CASE("dual conic") {
  CHECK(dualize(circle()) == circle());
  CHECK(dualize(Conic(Mat3::diagonal(4, 1, -1))) == Conic(Mat3::diagonal(1, 4, -4)));
  const Conic c = circle_at(2, 1, 3);
  CHECK(dualize(dualize(c)) == c);
  // Tangent lines of c are points of the dual conic.
  const HomLine t = tangent_at(circle(), HomPoint(3, 4, 5));
  CHECK(on_conic(dualize(circle()), HomPoint(t.coords())));
}

TEST_CASE("bundle and pencil members") {
  CHECK(bundle_member(0, 0, 1) == circle());
  CHECK(bundle_member(4, 0, 2) == circle_at(4, 0, 4));
  CHECK(bundle_member(0, 0, -1) == circle());
  CHECK(error_of([] { bundle_member(1, 1, 0); }) == ErrorCode::ZeroRadius);

  CHECK(pencil_member(circle(), HomLine(0, 1, 0), 3) == Conic(Mat3::diagonal(1, 4, -1)));
  CHECK(pencil_member(circle(), HomLine(0, 0, 1), -2) == Conic(Mat3::diagonal(1, 1, -3)));
  CHECK(pencil_member(circle(), HomLine(0, 1, 0), 0) == circle());
  CHECK(error_of([] { pencil_member(circle(), HomLine(0, 0, 1), 1); }) ==
        ErrorCode::DegenerateConic);
  CHECK(same_trace_on_line(circle(), pencil_member(circle(), HomLine(0, 1, 0), 3), HomLine(0, 1, 0)));
  CHECK_FALSE(same_trace_on_line(circle(), circle_at(4, 0, 4), HomLine(0, 1, 0)));
}

TEST_CASE("rational point search") {
  const auto p = find_rational_point(circle_at(4, 0, 4));
  REQUIRE(p);
  CHECK(on_conic(circle_at(4, 0, 4), *p));
  // x^2 + y^2 = 3 has no rational points.
  CHECK_FALSE(find_rational_point(Conic(Mat3::diagonal(1, 1, -3))));
}
