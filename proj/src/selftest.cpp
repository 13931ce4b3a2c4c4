#include "porism/selftest.hpp"

#include <algorithm>
#include <functional>

#include "porism/classic.hpp"
#include "porism/commands.hpp"
#include "porism/porism.hpp"
#include "porism/render.hpp"
#include "porism/scene.hpp"

namespace porism {

namespace {

using gen::Rng;

void check(bool ok, const std::string& what) {
  if (!ok) throw SuiteFailure(what);
}

template <class Fn>
void expect_error(ErrorCode code, Fn&& fn, const std::string& what) {
  try {
    fn();
  } catch (const GeometryError& e) {
    check(e.code() == code, what + ": got " + e.what());
    return;
  }
  throw SuiteFailure(what + ": no error");
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// A line of the requested kind relative to the conic.
HomLine line_of_kind(Rng& rng, const gen::PointedConic& pc, int kind) {
  switch (kind) {
    case 0: return gen::rational_secant(rng, pc);
    case 1: return gen::tangent_line(rng, pc);
    default: return gen::missing_line(rng, pc);
  }
}

// A point on l, off the conic, different from `avoid`.
HomPoint other_point_on_line(Rng& rng, const Conic& c, const HomLine& l, const HomPoint& avoid) {
  for (;;) {
    HomPoint p = gen::point_on_line_off_conic(rng, c, l);
    if (p != avoid) return p;
  }
}

std::array<HomPoint, 4> four(const std::vector<HomPoint>& v) { return {v[0], v[1], v[2], v[3]}; }

// --- core_projective ---------------------------------------------------------

void canonical_form(Rng& rng) {
  const HomPoint p = gen::point(rng);
  const Scalar k = gen::nonzero_scalar(rng);
  check(HomPoint(k * p.coords()) == p, "scaled point changed canonical form");
  check(HomPoint(p.coords()) == p, "canonicalization is not idempotent");
  const Mat3 m = gen::invertible_matrix(rng);
  check(ProjMap(Scalar(k) * m) == ProjMap(m), "scaled map changed canonical form");
}

void join_meet_duality(Rng& rng) {
  const HomPoint p = gen::point(rng);
  HomPoint q = gen::point(rng);
  while (q == p) q = gen::point(rng);
  const HomLine l = join(p, q);
  check(incident(p, l) && incident(q, l), "join misses its points");
  const HomLine m = gen::line(rng);
  if (m != l) check(incident(meet(l, m), l) && incident(meet(l, m), m), "meet off its lines");
  expect_error(ErrorCode::CoincidentPoints, [&] { join(p, p); }, "join(p, p)");
}

void cross_ratio_invariance(Rng& rng) {
  const HomLine l = gen::line(rng);
  std::vector<HomPoint> pts;
  while (pts.size() < 4) {
    HomPoint x = gen::point_on_line(rng, l);
    if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
  }
  const CrossRatio cr = cross_ratio(pts[0], pts[1], pts[2], pts[3]);
  const ProjMap m(gen::invertible_matrix(rng));
  std::vector<HomPoint> img;
  for (const auto& x : pts) img.push_back(apply_point(m, x));
  check(cross_ratio(img[0], img[1], img[2], img[3]) == cr, "cross-ratio not projectively invariant");
  check(cross_ratio(pts[1], pts[0], pts[3], pts[2]) == cr, "cr(A,B;C,D) != cr(B,A;D,C)");
  check(cross_ratio(pts[2], pts[3], pts[0], pts[1]) == cr, "cr(A,B;C,D) != cr(C,D;A,B)");
}

void map_incidence(Rng& rng) {
  const ProjMap m(gen::invertible_matrix(rng));
  const HomLine l = gen::line(rng);
  const HomPoint p = gen::point_on_line(rng, l);
  check(incident(apply_point(m, p), apply_line(m, l)), "incidence not preserved");
  check(is_identity(compose(inverse(m), m)), "inverse(m) m != id");
  const ProjMap n(gen::invertible_matrix(rng));
  check(apply_point(compose(n, m), p) == apply_point(n, apply_point(m, p)), "compose order");
}

// --- conics ------------------------------------------------------------------

void polarity(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  const HomPoint p = gen::point(rng);
  const HomPoint q = gen::point(rng);
  check(pole(pc.conic, polar(pc.conic, p)) == p, "pole(polar(P)) != P");
  check(incident(p, polar(pc.conic, q)) == incident(q, polar(pc.conic, p)),
        "conjugacy is not symmetric");
  const HomPoint x = gen::point_on_conic(rng, pc);
  check(incident(x, tangent_at(pc.conic, x)), "tangent misses its contact point");
  check(std::holds_alternative<Tangent>(line_position(pc.conic, tangent_at(pc.conic, x))),
        "tangent not classified as tangent");
}

void second_intersection_involution(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  const HomPoint x = gen::point_on_conic(rng, pc);
  const HomPoint p = gen::point_off_conic(rng, pc.conic);
  if (p == x) return;
  const HomLine l = join(x, p);
  const HomPoint y = second_intersection(pc.conic, x, l);
  check(on_conic(pc.conic, y) && incident(y, l), "second intersection off the conic or line");
  check(second_intersection(pc.conic, y, l) == x, "second intersection is not an involution");
}

void five_point_conic(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  std::vector<HomPoint> pts;
  while (pts.size() < 5) {
    HomPoint x = gen::point_on_conic(rng, pc);
    if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
  }
  const std::array<HomPoint, 5> five{pts[0], pts[1], pts[2], pts[3], pts[4]};
  check(conic_through_five_points(five) == pc.conic, "five-point conic differs");
}

void harmonic_conjugate(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  const HomLine l = gen::rational_secant(rng, pc);
  const auto sec = std::get<Secant>(line_position(pc.conic, l));
  const HomPoint p = gen::point_on_line_off_conic(rng, pc.conic, l);
  const HomPoint q = conjugate_on_line(pc.conic, l, p);
  check(bilinear(pc.conic, p, q).is_zero(), "conjugate is not conjugate");
  check(cross_ratio(sec.r, sec.s, p, q) == CrossRatio::finite(Scalar(-1)),
        "conjugate pair is not harmonic with R, S");
}

void rational_points(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  const Scalar t = gen::scalar(rng);
  Scalar u = gen::scalar(rng);
  while (u == t) u = gen::scalar(rng);
  const HomPoint x = rational_point(pc.conic, pc.base, t);
  const HomPoint y = rational_point(pc.conic, pc.base, u);
  check(on_conic(pc.conic, x) && on_conic(pc.conic, y), "rational point off the conic");
  // Only the tangent direction at the base maps back to the base.
  check(x != y || x == pc.base, "distinct parameters gave one point");
}

void pencil_members(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  const HomLine l = gen::line(rng);
  const Scalar mu = gen::nonzero_scalar(rng);
  Conic d = pc.conic;
  try {
    d = pencil_member(pc.conic, l, mu);
  } catch (const GeometryError&) {
    return;
  }
  // The two forms agree on l up to the overall scale of the stored matrices.
  const Vec3 x = gen::point_on_line(rng, l).coords();
  for (int i = 0; i < 3; ++i) {
    const Vec3 y = gen::point_on_line(rng, l).coords();
    check(eval(d, x) * eval(pc.conic, y) == eval(d, y) * eval(pc.conic, x),
          "pencil member changes the form on l");
  }
}

void radical_axes(Rng& rng) {
  const Scalar a1 = gen::scalar(rng, 5), a2 = gen::scalar(rng, 5);
  const Scalar b1 = gen::scalar(rng, 5), b2 = gen::scalar(rng, 5);
  if (a1 == b1 && a2 == b2) return;
  const HomLine axis = radical_axis(bundle_member(a1, a2, gen::nonzero_scalar(rng, 5)),
                                    bundle_member(b1, b2, gen::nonzero_scalar(rng, 5)));
  // The axis direction (-l2, l1) is orthogonal to the center offset.
  const Vec3& l = axis.coords();
  check(((b1 - a1) * (-l[1]) + (b2 - a2) * l[0]).is_zero(), "radical axis not perpendicular");
}

void line_classification(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  check(std::holds_alternative<Secant>(line_position(pc.conic, gen::rational_secant(rng, pc))),
        "rational secant misclassified");
  check(std::holds_alternative<Tangent>(line_position(pc.conic, gen::tangent_line(rng, pc))),
        "tangent misclassified");
}

// --- reversion ---------------------------------------------------------------

void reversion_matrix_vs_geometry(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  const HomPoint p = gen::point_off_conic(rng, pc.conic);
  const ProjMap m = reversion_matrix(pc.conic, p);
  for (int i = 0; i < 3; ++i) {
    const HomPoint x = gen::point_on_conic(rng, pc);
    HomPoint expect = x;
    if (x != p) expect = second_intersection(pc.conic, x, join(x, p));
    check(apply_point(m, x) == expect, "matrix action differs from second intersection");
  }
  check(is_identity(compose(m, m)), "reversion is not an involution");
  const Mat3 raw = reversion_formula(pc.conic, p);
  const Scalar s = eval(pc.conic, p.coords());
  check(raw * raw == (s * s) * Mat3::identity(), "M^2 != <P,P>^2 I");
  check(raw.transpose() * pc.conic.matrix() * raw == (s * s) * pc.conic.matrix(),
        "M^T A M != <P,P>^2 A");
  check(apply_point(m, p) == p, "center is not fixed");
  const HomLine axis = polar(pc.conic, p);
  const HomPoint on_axis = gen::point_on_line(rng, axis);
  check(apply_point(m, on_axis) == on_axis, "axis is not pointwise fixed");
  const HomPoint other = gen::point(rng);
  if (other != p) check(apply_line(m, join(p, other)) == join(p, other), "line through P moved");
  const Mat3& a = m.matrix();
  check(proportional(a.transpose() * pc.conic.matrix() * a, pc.conic.matrix()),
        "reversion does not preserve the conic");
}

void three_to_one_composition(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  const HomLine l = gen::line(rng);
  const auto pts = gen::distinct_points_on_line(rng, pc.conic, l, 3);
  const auto t = three_to_one_detailed(pc.conic, pts[0], pts[1], pts[2]);
  const Conic& c = pc.conic;
  check(eval(c, t.x_raw) ==
            eval(c, pts[0].coords()) * eval(c, pts[1].coords()) * eval(c, pts[2].coords()),
        "norm identity fails");
  const std::vector<HomPoint> chain{pts[0], pts[1], pts[2]};
  check(compose_reversions(c, chain) == reversion_matrix(c, t.x), "M_X != M_W M_V M_U");
  check(is_reversion(c, compose_reversions(c, chain)) == t.x, "three-to-one round trip");
  check(incident(t.x, l) && !on_conic(c, t.x), "X off the line or on the conic");
}

void reversion_recognition(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  const HomPoint p = gen::point_off_conic(rng, pc.conic);
  check(is_reversion(pc.conic, reversion_matrix(pc.conic, p)) == p, "is_reversion(M_P) != P");
  const HomPoint q = gen::point_off_conic(rng, pc.conic);
  if (q == p) return;
  const std::vector<HomPoint> two{p, q};
  const auto composite = is_reversion(pc.conic, compose_reversions(pc.conic, two));
  // Two reversions commute exactly when their centers are conjugate.
  if (bilinear(pc.conic, p, q).is_zero()) {
    check(composite == pole(pc.conic, join(p, q)), "conjugate centers: composite center");
  } else {
    check(!composite, "two non-conjugate reversions compose to a reversion");
  }
}

// --- porism ------------------------------------------------------------------

void universality(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  const HomLine l = line_of_kind(rng, pc, static_cast<int>(pick(rng, 0, 2)));
  const std::size_t n = 2 * pick(rng, 2, 4);
  const auto centers = gen::closing_centers_on_line(rng, pc.conic, l, n);
  check(closing_property(pc.conic, centers), "generated scene does not close");
  for (int i = 0; i < 5; ++i) {
    const HomPoint a1 = gen::point_on_conic(rng, pc);
    check(trace_polygon(pc.conic, centers, a1).closed, "closing scene traced an open polygon");
  }
}

void butterfly_criterion(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  const HomLine l = gen::rational_secant(rng, pc);
  auto centers = gen::closing_centers_on_line(rng, pc.conic, l, 4);
  const auto yes = butterfly_secant_criterion(pc.conic, four(centers), l);
  check(yes.closes && yes.outer == yes.inner, "closing scene fails the cross-ratio test");
  centers[3] = other_point_on_line(rng, pc.conic, l, centers[3]);
  const auto no = butterfly_secant_criterion(pc.conic, four(centers), l);
  check(!no.closes && !closing_property(pc.conic, centers), "perturbed scene passes");
}

void tangent_criterion(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  const HomPoint r = gen::point_on_conic(rng, pc);
  const HomLine t = tangent_at(pc.conic, r);
  auto centers = gen::closing_centers_on_line(rng, pc.conic, t, 4);
  check(butterfly_tangent_criterion(pc.conic, r, four(centers)).closes,
        "closing tangent scene fails the tangent criterion");
  centers[3] = other_point_on_line(rng, pc.conic, t, centers[3]);
  check(butterfly_tangent_criterion(pc.conic, r, four(centers)).closes ==
            closing_property(pc.conic, centers),
        "tangent criterion disagrees with the closing property");
}

void completion(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  const std::size_t n = pick(rng, 3, 8);
  std::vector<HomPoint> prefix;
  for (std::size_t i = 0; i + 2 < n; ++i) prefix.push_back(gen::point_off_conic(rng, pc.conic));
  if (closing_property(pc.conic, prefix)) return;
  const SeedOptions opts{pc.base};
  const HomLine l = closing_line(pc.conic, prefix, opts);
  const HomPoint next = gen::point_on_line_off_conic(rng, pc.conic, l);
  const HomPoint last = complete_porism(pc.conic, prefix, next, opts);
  auto all = prefix;
  all.push_back(next);
  all.push_back(last);
  check(closing_property(pc.conic, all), "completed scene does not close");
  all.back() = other_point_on_line(rng, pc.conic, l, last);
  check(!closing_property(pc.conic, all), "a second P_n also closes");
  // Off the closing line no P_n exists at all.
  HomPoint off = gen::point_off_conic(rng, pc.conic);
  while (incident(off, l)) off = gen::point_off_conic(rng, pc.conic);
  const ProjMap psi = compose_reversions(pc.conic, prefix);
  check(!is_reversion(pc.conic, compose(reversion_matrix(pc.conic, off), psi)),
        "a center off the closing line can be completed");
  SeedOptions shifted = opts;
  shifted.skip = 3;
  check(closing_line(pc.conic, prefix, shifted) == l, "closing line depends on the seeds");
}

void fixed_line_agreement(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  std::vector<HomPoint> prefix;
  const std::size_t k = pick(rng, 1, 4);
  for (std::size_t i = 0; i < k; ++i) prefix.push_back(gen::point_off_conic(rng, pc.conic));
  const ProjMap m = compose_reversions(pc.conic, prefix);
  if (is_identity(m)) return;
  const FixedElements fe = fixed_elements(pc.conic, m, {pc.base});
  check(apply_line(m, fe.line) == fe.line, "fixed line is not fixed");
  check(fe.pole == pole(pc.conic, fe.line), "pole mismatch");
  const LinePosition lp = line_position(pc.conic, fe.line);
  check(lp.index() == fe.position.index(), "classification differs from line_position");
  if (const auto spectral = spectral_fixed_line(pc.conic, m)) {
    check(*spectral == fe.line, "spectral fixed line differs from the ruler construction");
  }
}

void three_fixed_points(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  const HomLine l = line_of_kind(rng, pc, static_cast<int>(pick(rng, 0, 2)));
  auto centers = gen::closing_centers_on_line(rng, pc.conic, l, 2 * pick(rng, 1, 3));
  centers.back() = other_point_on_line(rng, pc.conic, l, centers.back());
  // A non-identity map of the conic fixes at most two of its points.
  std::vector<HomPoint> closed;
  for (int i = 0; i < 8; ++i) {
    const HomPoint a1 = gen::point_on_conic(rng, pc, 3);
    if (trace_polygon(pc.conic, centers, a1).closed &&
        std::find(closed.begin(), closed.end(), a1) == closed.end()) {
      closed.push_back(a1);
    }
  }
  check(closed.size() <= 2, "non-closing scene closed from three starts");
}

void general_transfer(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  const HomLine l = line_of_kind(rng, pc, pick(rng, 0, 1) == 0 ? 0 : 2);
  const auto centers = gen::closing_centers_on_line(rng, pc.conic, l, 4);
  const auto p = four(centers);
  HomPoint r = gen::point_on_line(rng, l);
  while (std::find(centers.begin(), centers.end(), r) != centers.end()) {
    r = gen::point_on_line(rng, l);
  }
  const HomPoint s = transfer_partner(l, r, p);
  if (s == r || std::find(centers.begin(), centers.end(), s) != centers.end()) return;
  // Any conic through R' and S' and three points off l.
  std::array<HomPoint, 5> five{r, s, gen::point(rng), gen::point(rng), gen::point(rng)};
  Conic d = Conic::unit_circle();
  try {
    d = conic_through_five_points(five);
  } catch (const GeometryError&) {
    return;
  }
  if (std::any_of(centers.begin(), centers.end(), [&](const HomPoint& x) { return on_conic(d, x); })) {
    return;
  }
  check(transfer_check(PorismScene(pc.conic, centers), d), "R'/S' transfer fails");
}

void conjugate_transfer(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  const HomLine l = line_of_kind(rng, pc, pick(rng, 0, 1) == 0 ? 0 : 2);
  const std::size_t n = 2 * pick(rng, 1, 4);
  const auto centers = gen::closing_centers_on_line(rng, pc.conic, l, n);
  const auto conj = conjugate_scene(pc.conic, l, centers);
  check(closing_property(pc.conic, conj), "conjugate scene does not close");
}

void pencil_transfer(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  const HomLine l = line_of_kind(rng, pc, static_cast<int>(pick(rng, 0, 2)));
  const auto centers = gen::closing_centers_on_line(rng, pc.conic, l, pick(rng, 0, 1) ? 4 : 6);
  const PorismScene scene(pc.conic, centers);
  int members = 0;
  for (int tries = 0; tries < 40 && members < 10; ++tries) {
    const Scalar mu = gen::nonzero_scalar(rng);
    std::optional<Conic> d;
    try {
      d = pencil_member(pc.conic, l, mu);
    } catch (const GeometryError&) {
      continue;
    }
    if (std::any_of(centers.begin(), centers.end(),
                    [&](const HomPoint& p) { return on_conic(*d, p); })) {
      continue;
    }
    check(transfer_check(scene, *d), "pencil member does not inherit the closing property");
    ++members;
  }
}

void circle_transfer(Rng& rng) {
  const auto c1 = bundle_member(gen::scalar(rng, 4), gen::scalar(rng, 4), gen::nonzero_scalar(rng, 4));
  const auto c2 = bundle_member(gen::scalar(rng, 4), gen::scalar(rng, 4), gen::nonzero_scalar(rng, 4));
  if (c1 == c2) return;
  HomLine axis = HomLine(1, 0, 0);
  try {
    axis = radical_axis(c1, c2);
  } catch (const GeometryError&) {
    return;  // concentric
  }
  const auto centers = gen::closing_centers_on_line(rng, c1, axis, 4);
  if (std::any_of(centers.begin(), centers.end(),
                  [&](const HomPoint& p) { return on_conic(c2, p); })) {
    return;
  }
  check(transfer_check(PorismScene(c1, centers), c2), "radical-axis transfer fails");
}

void noncollinear(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  const HomPoint u = gen::point_off_conic(rng, pc.conic);
  const HomPoint v = gen::point_off_conic(rng, pc.conic);
  const HomPoint w = gen::point_off_conic(rng, pc.conic);
  if (u == v || v == w || u == w) return;
  const std::vector<HomPoint> three{u, v, w};
  check(is_reversion(pc.conic, compose_reversions(pc.conic, three)).has_value() ==
            collinear(u, v, w),
        "fourth center exists iff the three are collinear");
}

void odd_nonclosure(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  const HomLine l = gen::line(rng);
  const std::size_t n = pick(rng, 0, 1) == 0 ? 3 : 5;
  const auto centers = gen::distinct_points_on_line(rng, pc.conic, l, n);
  check(!closing_property(pc.conic, centers), "odd number of reversions closes");
}

void dual_butterfly(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  const HomPoint big_l = gen::point_off_conic(rng, pc.conic);
  const HomLine axis = polar(pc.conic, big_l);
  const auto q = gen::closing_centers_on_line(rng, pc.conic, axis, 4);
  std::vector<HomLine> spokes;
  for (const auto& p : q) spokes.push_back(polar(pc.conic, p));
  std::vector<HomLine> chain;
  const auto degenerate = [&] {
    // A vertex on the conic repeats a tangent.
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      if (chain[i] == chain[i + 1] || incident(big_l, chain[i])) return true;
    }
    return chain.empty();
  };
  while (degenerate()) chain = dual_chain(pc.conic, spokes, gen::tangent_line(rng, pc));
  check(chain[4] == chain[0], "dual chain does not close");
  const std::array<HomLine, 4> t{chain[0], chain[1], chain[2], chain[3]};
  check(dual_butterfly_check(pc.conic, t, big_l), "dualized closing scene fails the check");
}

// --- classic -----------------------------------------------------------------

void pappus(Rng& rng) {
  const HomLine l1 = gen::line(rng);
  HomLine l2 = gen::line(rng);
  while (l2 == l1) l2 = gen::line(rng);
  std::array<HomPoint, 6> hex{HomPoint(1, 0, 0), HomPoint(1, 0, 0), HomPoint(1, 0, 0),
                              HomPoint(1, 0, 0), HomPoint(1, 0, 0), HomPoint(1, 0, 0)};
  for (std::size_t i = 0; i < 6; ++i) hex[i] = gen::point_on_line(rng, i % 2 == 0 ? l1 : l2);
  try {
    check(pascal_points(LinePair{l1, l2}, hex).collinear(), "Pappus points not collinear");
    pappus_regenerate({l1, l2}, hex, gen::point_on_line(rng, l1));
  } catch (const GeometryError& e) {
    if (e.code() != ErrorCode::DegenerateHexagon && e.code() != ErrorCode::DegenerateStart) throw;
  }
}

void pascal(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  std::array<HomPoint, 6> hex{pc.base, pc.base, pc.base, pc.base, pc.base, pc.base};
  for (auto& v : hex) v = gen::point_on_conic(rng, pc);
  try {
    check(pascal_points(pc.conic, hex).collinear(), "Pascal points not collinear");
    pascal_regenerate(pc.conic, hex, gen::point_on_conic(rng, pc));
  } catch (const GeometryError& e) {
    if (e.code() != ErrorCode::DegenerateHexagon && e.code() != ErrorCode::DegenerateStart) throw;
  }
}

void scissors(Rng& rng) {
  const HomLine l1 = gen::line(rng);
  HomLine l2 = gen::line(rng);
  while (l2 == l1) l2 = gen::line(rng);
  std::array<HomPoint, 4> quad{HomPoint(1, 0, 0), HomPoint(1, 0, 0), HomPoint(1, 0, 0),
                               HomPoint(1, 0, 0)};
  for (std::size_t i = 0; i < 4; ++i) quad[i] = gen::point_on_line(rng, i % 2 == 0 ? l1 : l2);
  const HomLine axis = gen::line(rng);
  try {
    std::array<HomPoint, 4> p = quad;
    for (std::size_t i = 0; i < 4; ++i) p[i] = meet(join(quad[i], quad[(i + 1) % 4]), axis);
    const auto after = scissors_regenerate({l1, l2}, quad, p, gen::point_on_line(rng, l1));
    check(affine_relation(axis, quad, after) != AffineRelation::None ||
              std::any_of(quad.begin(), quad.end(), [&](const HomPoint& v) { return incident(v, axis); }) ||
              std::any_of(after.begin(), after.end(), [&](const HomPoint& v) { return incident(v, axis); }),
          "Scissors quadrilaterals are not related by a translation or homothety");
  } catch (const GeometryError& e) {
    switch (e.code()) {
      case ErrorCode::DegenerateHexagon:
      case ErrorCode::DegenerateStart:
      case ErrorCode::CoincidentLines:
      case ErrorCode::CoincidentPoints:
      case ErrorCode::InvalidConfiguration:
        return;
      default:
        throw;
    }
  }
}

// --- cli -----------------------------------------------------------------------

SceneFile random_scene(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  const HomLine l = gen::rational_secant(rng, pc);
  const auto centers = gen::closing_centers_on_line(rng, pc.conic, l, 4);
  SceneFile s;
  s.conics.push_back({"C", pc.conic});
  s.host = "C";
  for (std::size_t i = 0; i < centers.size(); ++i) {
    const std::string name = "P" + std::to_string(i + 1);
    s.points.push_back({name, centers[i], Role::Given});
    s.porism.push_back(name);
  }
  s.points.push_back({"A", pc.base, Role::Seed});
  s.lines.push_back({"ell", l});
  return s;
}

void scene_roundtrip(Rng& rng) {
  const SceneFile s = random_scene(rng);
  const std::string text = serialize_scene(s);
  const SceneFile back = parse_scene(text);
  check(serialize_scene(back) == text, "parse -> serialize is not the identity");
  check(back.centers() == s.centers() && back.host_conic() == s.host_conic(),
        "scene objects changed in the round trip");
}

void render_determinism(Rng& rng) {
  const SceneFile s = random_scene(rng);
  const auto traces = scene_traces(s, Scalar(0), 2);
  const std::string a = render_svg(s, traces, {});
  const std::string b = render_svg(parse_scene(serialize_scene(s)), scene_traces(s, Scalar(0), 2), {});
  check(a == b, "render is not byte-stable");
}

void complete_then_verify(Rng& rng) {
  const auto pc = gen::pointed_conic(rng);
  SceneFile s;
  s.conics.push_back({"C", pc.conic});
  s.host = "C";
  s.points.push_back({"A", pc.base, Role::Seed});
  const std::size_t n = pick(rng, 3, 6);
  std::vector<HomPoint> prefix;
  for (std::size_t i = 0; i + 2 < n; ++i) prefix.push_back(gen::point_off_conic(rng, pc.conic));
  if (closing_property(pc.conic, prefix)) return;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    s.points.push_back({"P" + std::to_string(i + 1), prefix[i], Role::Given});
    s.porism.push_back("P" + std::to_string(i + 1));
  }
  const HomLine l = closing_line(pc.conic, prefix, {pc.base});
  CompleteRequest req;
  req.next = gen::point_on_line_off_conic(rng, pc.conic, l);
  req.next_name = "Q";
  const auto done = cmd_complete(s, req);
  check(done.document.has_value(), "complete wrote no scene");
  check(cmd_verify(parse_scene(*done.document)).exit_code == kSuccess,
        "completed scene does not verify");
}

}  // namespace

const std::vector<Suite>& property_suites() {
  static const std::vector<Suite> suites{
      {"core.canonical_form", canonical_form},
      {"core.join_meet", join_meet_duality},
      {"core.cross_ratio_invariance", cross_ratio_invariance},
      {"core.map_incidence", map_incidence},
      {"conics.polarity", polarity},
      {"conics.second_intersection", second_intersection_involution},
      {"conics.five_points", five_point_conic},
      {"conics.harmonic_conjugate", harmonic_conjugate},
      {"conics.line_classification", line_classification},
      {"conics.rational_points", rational_points},
      {"conics.pencil_members", pencil_members},
      {"conics.radical_axis", radical_axes},
      {"reversion.matrix_vs_geometry", reversion_matrix_vs_geometry},
      {"reversion.three_to_one", three_to_one_composition},
      {"reversion.recognition", reversion_recognition},
      {"porism.universality", universality},
      {"porism.butterfly_criterion", butterfly_criterion},
      {"porism.tangent_criterion", tangent_criterion},
      {"porism.completion", completion},
      {"porism.fixed_line", fixed_line_agreement},
      {"porism.three_fixed_points", three_fixed_points},
      {"porism.conjugate_transfer", conjugate_transfer},
      {"porism.general_transfer", general_transfer},
      {"porism.pencil_transfer", pencil_transfer},
      {"porism.circle_transfer", circle_transfer},
      {"porism.noncollinear", noncollinear},
      {"porism.odd_nonclosure", odd_nonclosure},
      {"porism.dual_butterfly", dual_butterfly},
      {"classic.pappus", pappus},
      {"classic.pascal", pascal},
      {"classic.scissors", scissors},
      {"cli.scene_roundtrip", scene_roundtrip},
      {"cli.render_determinism", render_determinism},
      {"cli.complete_then_verify", complete_then_verify},
  };
  return suites;
}

SuiteResult run_suite(const Suite& suite, std::size_t cases, std::uint64_t seed) {
  // FNV-1a keeps the per-suite stream identical across standard libraries.
  std::uint32_t h = 2166136261u;
  for (const char ch : suite.name) h = (h ^ static_cast<unsigned char>(ch)) * 16777619u;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), h};
  Rng rng(seq);
  SuiteResult r{suite.name, true, 0, {}};
  for (std::size_t i = 0; i < cases; ++i) {
    ++r.cases;
    try {
      suite.run_case(rng);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = "case " + std::to_string(i) + ": " + e.what();
      break;
    }
  }
  return r;
}

std::vector<SuiteResult> run_selftest(std::size_t cases, std::uint64_t seed,
                                      const std::string& filter) {
  std::vector<SuiteResult> out;
  for (const auto& s : property_suites()) {
    if (s.name.rfind(filter, 0) == 0) out.push_back(run_suite(s, cases, seed));
  }
  return out;
}

}  // namespace porism
