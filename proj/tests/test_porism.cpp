#include "support.hpp"

using namespace testing;

namespace {

const std::vector<HomPoint> kButterfly{HomPoint(0, 0, 1), HomPoint(2, 0, 1), HomPoint(3, 0, 1),
                                       HomPoint(-1, 0, 5)};

std::array<HomPoint, 4> as4(const std::vector<HomPoint>& v) { return {v[0], v[1], v[2], v[3]}; }

}  // namespace

TEST_CASE("scene construction") {
  CHECK(error_of([] { PorismScene(circle(), {}); }) == ErrorCode::EmptyScene);
  CHECK(error_of([] { PorismScene(circle(), {HomPoint(3, 4, 5)}); }) == ErrorCode::CenterOnConic);
}

TEST_CASE("closing property") {
  CHECK(closing_property(circle(), kButterfly));
  auto perturbed = kButterfly;
  perturbed.back() = HomPoint(-1, 0, 4);
  CHECK_FALSE(closing_property(circle(), perturbed));
  CHECK(closing_property(circle(), std::vector<HomPoint>{HomPoint(0, 0, 1), HomPoint(1, 0, 0),
                                                         HomPoint(0, 1, 0)}));
  CHECK(closing_property(circle(), std::vector<HomPoint>{HomPoint(2, 3, 1), HomPoint(2, 3, 1)}));
}

TEST_CASE("traced polygons") {
  const PorismScene scene(circle(), kButterfly);
  for (const HomPoint& a1 : {HomPoint(0, 1, 1), HomPoint(3, 4, 5), half_angle(q(7, 3))}) {
    const PolygonTrace t = trace_polygon(scene, a1);
    REQUIRE(t.vertices.size() == 5);
    CHECK(t.closed);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(on_conic(circle(), t.vertices[i]));
      CHECK(t.vertices[i + 1] == chord_partner(t.vertices[i], kButterfly[i]));
    }
  }
  auto perturbed = kButterfly;
  perturbed.back() = HomPoint(-1, 0, 4);
  CHECK_FALSE(trace_polygon(circle(), perturbed, HomPoint(0, 1, 1)).closed);
  CHECK(error_of([&] { trace_polygon(scene, HomPoint(0, 0, 1)); }) == ErrorCode::PointNotOnConic);
}

TEST_CASE("fixed elements") {
  const auto two = [](HomPoint a, HomPoint b) {
    return compose_reversions(circle(), std::vector<HomPoint>{a, b});
  };
  const FixedElements sec = fixed_elements(circle(), two(HomPoint(0, 0, 1), HomPoint(2, 0, 1)));
  CHECK(sec.line == HomLine(0, 1, 0));
  CHECK(sec.pole == HomPoint(0, 1, 0));
  REQUIRE(std::holds_alternative<Secant>(sec.position));
  CHECK(std::get<Secant>(sec.position).r == HomPoint(1, 0, 1));
  CHECK(std::get<Secant>(sec.position).s == HomPoint(-1, 0, 1));
  REQUIRE(sec.tangents);
  CHECK((*sec.tangents)[0] == HomLine(1, 0, -1));
  CHECK((*sec.tangents)[1] == HomLine(1, 0, 1));

  const FixedElements miss = fixed_elements(circle(), two(HomPoint(0, 2, 1), HomPoint(1, 2, 1)));
  CHECK(miss.line == HomLine(0, 1, -2));
  CHECK(miss.pole == HomPoint(0, 1, 2));
  CHECK(std::holds_alternative<Missing>(miss.position));

  const FixedElements tan = fixed_elements(circle(), two(HomPoint(-1, 1, 1), HomPoint(1, 1, 1)));
  CHECK(tan.line == HomLine(0, 1, -1));
  CHECK(tan.pole == HomPoint(0, 1, 1));
  CHECK(std::holds_alternative<Tangent>(tan.position));
  CHECK_FALSE(tan.tangents);

  CHECK(error_of([] { fixed_elements(circle(), ProjMap::identity()); }) == ErrorCode::IdentityMap);
  CHECK(error_of([] { fixed_elements(circle(), ProjMap(Mat3::diagonal(1, 2, 3))); }) ==
        ErrorCode::InvalidConfiguration);
}

TEST_CASE("spectral fixed line agrees with the constructive one") {
  const ProjMap m = compose_reversions(circle(), std::vector<HomPoint>{HomPoint(0, 0, 1), HomPoint(2, 0, 1)});
  CHECK(spectral_fixed_line(circle(), m) == HomLine(0, 1, 0));
  const ProjMap t = compose_reversions(circle(), std::vector<HomPoint>{HomPoint(-1, 1, 1), HomPoint(1, 1, 1)});
  CHECK(spectral_fixed_line(circle(), t) == HomLine(0, 1, -1));
}

TEST_CASE("closing line by ruler construction") {
  CHECK(closing_line(circle(), std::vector<HomPoint>{HomPoint(0, 0, 1), HomPoint(2, 0, 1)}) ==
        HomLine(0, 1, 0));
  CHECK(closing_line(circle(), std::vector<HomPoint>{HomPoint(0, 0, 1)}) == HomLine(0, 0, 1));
  CHECK(closing_line(circle(), std::vector<HomPoint>{HomPoint(0, 2, 1), HomPoint(1, 2, 1)}) ==
        HomLine(0, 1, -2));
  SeedOptions shifted;
  shifted.skip = 5;
  CHECK(closing_line(circle(), std::vector<HomPoint>{HomPoint(0, 2, 1), HomPoint(1, 2, 1)}, shifted) ==
        HomLine(0, 1, -2));
  CHECK(error_of([] {
          closing_line(circle(), std::vector<HomPoint>{HomPoint(2, 3, 1), HomPoint(2, 3, 1)});
        }) == ErrorCode::AlreadyClosing);

  const RulerConstruction r =
      closing_line_construction(circle(), std::vector<HomPoint>{HomPoint(0, 0, 1), HomPoint(2, 0, 1)});
  CHECK(incident(r.x, r.line));
  CHECK(incident(r.y, r.line));
  CHECK(r.x != r.y);
}

TEST_CASE("completion") {
  const std::vector<HomPoint> prefix{HomPoint(0, 0, 1), HomPoint(2, 0, 1)};
  CHECK(complete_porism(circle(), prefix, HomPoint(3, 0, 1)) == HomPoint(-1, 0, 5));
  CHECK(complete_porism(circle(), std::vector<HomPoint>{HomPoint(0, 0, 1)}, HomPoint(1, 0, 0)) ==
        HomPoint(0, 1, 0));
  CHECK(error_of([&] { complete_porism(circle(), prefix, HomPoint(3, 1, 1)); }) ==
        ErrorCode::CenterNotOnClosingLine);
  CHECK(error_of([&] { complete_porism(circle(), prefix, HomPoint(1, 0, 1)); }) ==
        ErrorCode::CenterOnConic);

  // Hexagon: four centers, then P5 on the closing line.
  const std::vector<HomPoint> four{HomPoint(0, 0, 1), HomPoint(1, 2, 1), HomPoint(-3, 1, 2),
                                   HomPoint(5, 5, 1)};
  const HomLine l = closing_line(circle(), four);
  const auto [x, y] = points_on(l);
  const HomPoint p5 = on_conic(circle(), x) ? y : x;
  const Completion done = complete_porism_detailed(circle(), four, p5);
  auto all = four;
  all.push_back(p5);
  all.push_back(done.last);
  CHECK(incident(done.last, l));
  for (long t = 0; t < 10; ++t) {
    CHECK(trace_polygon(circle(), all, half_angle(q(t, 3))).closed);
  }
  CHECK(is_reversion(circle(), compose(reversion_matrix(circle(), p5),
                                       compose_reversions(circle(), four))) == done.last);
}

TEST_CASE("secant criterion") {
  const SecantCriterion sc = butterfly_secant_criterion(circle(), as4(kButterfly));
  CHECK(sc.closes);
  CHECK(sc.r == HomPoint(1, 0, 1));
  CHECK(sc.s == HomPoint(-1, 0, 1));
  CHECK(sc.outer == CrossRatio::finite(q(2, 3)));
  CHECK(sc.inner == CrossRatio::finite(q(2, 3)));

  auto perturbed = kButterfly;
  perturbed.back() = HomPoint(-1, 0, 4);
  const SecantCriterion bad = butterfly_secant_criterion(circle(), as4(perturbed));
  CHECK_FALSE(bad.closes);
  CHECK(bad.outer == CrossRatio::finite(q(3, 5)));
  CHECK(bad.inner == CrossRatio::finite(q(2, 3)));

  const std::array<HomPoint, 4> pairs{HomPoint(2, 0, 1), HomPoint(2, 0, 1), HomPoint(5, 0, 1),
                                      HomPoint(5, 0, 1)};
  CHECK(butterfly_secant_criterion(circle(), pairs).closes);

  const std::array<HomPoint, 4> diagonal{HomPoint(0, 0, 1), HomPoint(2, 2, 1), HomPoint(3, 3, 1),
                                         HomPoint(5, 5, 1)};
  CHECK(error_of([&] { butterfly_secant_criterion(circle(), diagonal); }) ==
        ErrorCode::IrrationalIntersections);
}

TEST_CASE("tangent criterion") {
  const HomPoint r(0, 1, 1);
  const std::array<HomPoint, 4> good{HomPoint(1, 1, 1), HomPoint(2, 1, 1), HomPoint(3, 1, 1),
                                     HomPoint(6, 5, 5)};
  // 1/x4 = 1/x1 - 1/x2 + 1/x3.
  CHECK(q(1) - q(1, 2) + q(1, 3) == q(5, 6));
  CHECK(butterfly_tangent_criterion(circle(), r, good).closes);
  CHECK(closing_property(circle(), std::vector<HomPoint>(good.begin(), good.end())));

  std::array<HomPoint, 4> bad = good;
  bad[3] = HomPoint(1, 1, 1);
  CHECK_FALSE(butterfly_tangent_criterion(circle(), r, bad).closes);
  CHECK_FALSE(closing_property(circle(), std::vector<HomPoint>(bad.begin(), bad.end())));

  const std::array<HomPoint, 4> pairs{HomPoint(2, 1, 1), HomPoint(2, 1, 1), HomPoint(-3, 1, 1),
                                      HomPoint(-3, 1, 1)};
  CHECK(butterfly_tangent_criterion(circle(), r, pairs).closes);
  CHECK(error_of([&] { butterfly_tangent_criterion(circle(), HomPoint(1, 0, 1), good); }) ==
        ErrorCode::NotTangent);
}

TEST_CASE("conjugate scenes") {
  const auto conj = conjugate_scene(circle(), HomLine(0, 1, 0), kButterfly);
  CHECK(conj == std::vector<HomPoint>{HomPoint(1, 0, 0), HomPoint(1, 0, 2), HomPoint(1, 0, 3),
                                      HomPoint(5, 0, -1)});
  CHECK(closing_property(circle(), conj));
  const SecantCriterion sc = butterfly_secant_criterion(circle(), as4(conj));
  CHECK(sc.outer == CrossRatio::finite(q(2, 3)));
  CHECK(sc.inner == CrossRatio::finite(q(2, 3)));

  CHECK(conjugate_scene(circle(), HomLine(0, 1, 0), std::vector<HomPoint>{HomPoint(2, 0, 1), HomPoint(2, 0, 1)}) ==
        std::vector<HomPoint>{HomPoint(1, 0, 2), HomPoint(1, 0, 2)});

  // y = 2 misses the circle.
  const HomLine high(0, 1, -2);
  const std::vector<HomPoint> prefix{HomPoint(0, 2, 1), HomPoint(1, 2, 1), HomPoint(3, 2, 1)};
  const HomPoint last = three_to_one(circle(), prefix[0], prefix[1], prefix[2]);
  auto closing = prefix;
  closing.push_back(last);
  REQUIRE(closing_property(circle(), closing));
  CHECK(closing_property(circle(), conjugate_scene(circle(), high, closing)));

  CHECK(error_of([] {
          conjugate_scene(circle(), HomLine(0, 1, -1), std::vector<HomPoint>{HomPoint(2, 1, 1)});
        }) == ErrorCode::TangentLine);
}

TEST_CASE("transfer to other conics") {
  const PorismScene scene(circle(), kButterfly);
  CHECK(transfer_check(scene, pencil_member(circle(), HomLine(0, 1, 0), 3)));

  const std::vector<HomPoint> on_tangent{HomPoint(1, 1, 1), HomPoint(2, 1, 1), HomPoint(3, 1, 1),
                                         HomPoint(6, 5, 5)};
  CHECK(transfer_check(PorismScene(circle(), on_tangent), pencil_member(circle(), HomLine(0, 1, -1), 5)));

  // x = 13/8 is the radical axis of x^2 + y^2 = 1 and (x - 4)^2 + y^2 = 4.
  const HomLine axis(8, 0, -13);
  const std::vector<HomPoint> prefix{HomPoint(13, 0, 8), HomPoint(13, 8, 8), HomPoint(13, -3, 8)};
  auto centers = prefix;
  centers.push_back(three_to_one(circle(), prefix[0], prefix[1], prefix[2]));
  CHECK(incident(centers.back(), axis));
  CHECK(transfer_check(PorismScene(circle(), centers), bundle_member(4, 0, 2)));

  // Any conic through R' and S' = transfer_partner(R').
  const HomPoint r2(7, 0, 1);
  const HomPoint s2 = transfer_partner(HomLine(0, 1, 0), r2, as4(kButterfly));
  CHECK(cross_ratio(r2, s2, kButterfly[0], kButterfly[3]) ==
        cross_ratio(r2, s2, kButterfly[1], kButterfly[2]));
  const std::array<HomPoint, 5> five{r2, s2, HomPoint(0, 3, 1), HomPoint(1, -2, 1), HomPoint(4, 5, 1)};
  CHECK(transfer_check(scene, conic_through_five_points(five)));
}

TEST_CASE("dual butterfly") {
  // Tangents at a traced quadrilateral of the closing x-axis scene.
  const PolygonTrace t = trace_polygon(circle(), kButterfly, HomPoint(0, 1, 1));
  std::array<HomLine, 4> tangents{HomLine(1, 0, 0), HomLine(1, 0, 0), HomLine(1, 0, 0), HomLine(1, 0, 0)};
  for (std::size_t i = 0; i < 4; ++i) tangents[i] = tangent_at(circle(), t.vertices[i]);
  const DualButterfly d = dual_butterfly_detailed(circle(), tangents, HomPoint(0, 1, 0));
  CHECK(d.closes);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(d.contacts[i] == t.vertices[i]);
    CHECK(incident(d.centers[i], HomLine(0, 1, 0)));
  }

  const std::array<HomLine, 4> square{HomLine(1, 0, -1), HomLine(0, 1, -1), HomLine(1, 0, 1),
                                      HomLine(0, 1, 1)};
  CHECK(dual_butterfly_check(circle(), square, HomPoint(0, 0, 1)));

  // Each pole of a spoke lies on the chord of two consecutive contact points
  // and on the polar of L, so the traced contact quadrilateral closes and the
  // even composite also fixes both points of the polar of L on the conic.
  // Generic tangents with a generic L therefore close as well.
  const std::array<HomLine, 4> generic{tangent_at(circle(), HomPoint(1, 0, 1)),
                                       tangent_at(circle(), HomPoint(3, 4, 5)),
                                       tangent_at(circle(), HomPoint(-5, 12, 13)),
                                       tangent_at(circle(), HomPoint(8, -15, 17))};
  const DualButterfly g = dual_butterfly_detailed(circle(), generic, HomPoint(7, -2, 3));
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(collinear(g.contacts[i], g.contacts[(i + 1) % 4], g.centers[i]));
  }
  CHECK(g.closes);

  std::array<HomLine, 4> not_tangent = square;
  not_tangent[2] = HomLine(1, 0, 2);
  CHECK(error_of([&] { dual_butterfly_check(circle(), not_tangent, HomPoint(0, 0, 1)); }) ==
        ErrorCode::NotTangentLine);
}

TEST_CASE("non-collinear centers admit no fourth") {
  const ImpossibilityReport ok = noncollinear_impossibility_report(circle(), as4(kButterfly));
  CHECK(ok.closes);
  CHECK(ok.collinear);
  CHECK(ok.fourth == HomPoint(-1, 0, 5));

  const std::array<HomPoint, 4> scattered{HomPoint(0, 0, 1), HomPoint(2, 0, 1), HomPoint(0, 3, 1),
                                          HomPoint(5, 5, 1)};
  const ImpossibilityReport none = noncollinear_impossibility_report(circle(), scattered);
  CHECK_FALSE(none.fourth);
  CHECK_FALSE(none.closes);
  CHECK_FALSE(none.collinear);

  const std::array<HomPoint, 4> collapse{HomPoint(2, 0, 1), HomPoint(2, 0, 1), HomPoint(0, 3, 1),
                                         HomPoint(0, 3, 1)};
  CHECK(noncollinear_impossibility_report(circle(), collapse).closes);
}

TEST_CASE("odd composites of distinct collinear centers are not the identity") {
  CHECK_FALSE(closing_property(circle(), std::vector<HomPoint>{HomPoint(0, 0, 1), HomPoint(2, 0, 1),
                                                               HomPoint(3, 0, 1)}));
  CHECK_FALSE(closing_property(circle(), std::vector<HomPoint>{HomPoint(0, 0, 1), HomPoint(2, 0, 1),
                                                               HomPoint(3, 0, 1), HomPoint(-1, 0, 5),
                                                               HomPoint(7, 0, 2)}));
}
