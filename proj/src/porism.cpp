#include "porism/porism.hpp"

#include <sstream>

namespace porism {

PorismScene::PorismScene(Conic c, std::vector<HomPoint> centers, std::optional<HomLine> line_hint,
                         std::vector<HomPoint> seeds)
    : conic_(std::move(c)),
      centers_(std::move(centers)),
      line_hint_(std::move(line_hint)),
      seeds_(std::move(seeds)) {
  if (centers_.empty()) fail(ErrorCode::EmptyScene, "a porism scene needs at least one center");
  for (const auto& p : centers_) {
    if (on_conic(conic_, p)) fail(ErrorCode::CenterOnConic, p.str() + " lies on the conic");
  }
  for (const auto& s : seeds_) {
    if (!on_conic(conic_, s)) fail(ErrorCode::PointNotOnConic, "seed " + s.str());
  }
}

Scalar seed_parameter(std::size_t k) {
  if (k == 0) return 0;
  const long m = static_cast<long>((k + 1) / 2);
  return (k % 2 == 1) ? Scalar(m) : Scalar(-m);
}

bool closing_property(const Conic& c, std::span<const HomPoint> centers) {
  return is_identity(compose_reversions(c, centers));
}

bool closing_property(const PorismScene& scene) {
  return closing_property(scene.conic(), scene.centers());
}

PolygonTrace trace_polygon(const Conic& c, std::span<const HomPoint> centers, const HomPoint& a1) {
  if (!on_conic(c, a1)) fail(ErrorCode::PointNotOnConic, a1.str() + " is not on the conic");
  PolygonTrace t;
  t.vertices.push_back(a1);
  for (const auto& p : centers) t.vertices.push_back(reversion_apply(c, p, t.vertices.back()));
  t.closed = t.vertices.back() == a1;
  return t;
}

PolygonTrace trace_polygon(const PorismScene& scene, const HomPoint& a1) {
  return trace_polygon(scene.conic(), scene.centers(), a1);
}

namespace {

HomPoint base_point(const Conic& c, const SeedOptions& opts) {
  if (opts.base) {
    if (!on_conic(c, *opts.base)) {
      fail(ErrorCode::PointNotOnConic, "seed base " + opts.base->str() + " is not on the conic");
    }
    return *opts.base;
  }
  if (auto p = find_rational_point(c)) return *p;
  fail(ErrorCode::SeedExhaustion, "no rational seed point found on the conic; supply one");
}

// Chain end phi(A) by successive reversions: the ruler path.
HomPoint chain_end(const Conic& c, std::span<const HomPoint> centers, HomPoint a) {
  for (const auto& p : centers) a = reversion_apply(c, p, a);
  return a;
}

std::optional<HomPoint> cross_axis_point(const HomPoint& a, const HomPoint& fa, const HomPoint& b,
                                         const HomPoint& fb) {
  const HomLine l1 = join(a, fb);
  const HomLine l2 = join(b, fa);
  if (l1 == l2) return std::nullopt;
  return meet(l1, l2);
}

}  // namespace

RulerConstruction ruler_axis(const Conic& c, const std::function<HomPoint(const HomPoint&)>& image,
                             const SeedOptions& opts) {
  const HomPoint base = base_point(c, opts);
  struct Seed {
    HomPoint a;
    HomPoint fa;
  };
  std::vector<Seed> accepted;
  std::optional<HomPoint> x;

  for (std::size_t k = opts.skip; k < opts.skip + opts.max_attempts; ++k) {
    const HomPoint a = rational_point(c, base, seed_parameter(k));
    const HomPoint fa = image(a);
    if (fa == a) continue;
    bool ok = true;
    for (const auto& s : accepted) {
      if (a == s.a || a == s.fa || fa == s.a) ok = false;
    }
    if (!ok) continue;
    if (accepted.empty()) {
      accepted.push_back({a, fa});
      continue;
    }
    const auto& first = accepted.front();
    const auto pt = cross_axis_point(first.a, first.fa, a, fa);
    if (!pt) continue;
    if (!x) {
      x = pt;
      accepted.push_back({a, fa});
      continue;
    }
    if (*pt == *x) continue;
    accepted.push_back({a, fa});
    return RulerConstruction{{accepted[0].a, accepted[1].a, accepted[2].a},
                             {accepted[0].fa, accepted[1].fa, accepted[2].fa},
                             *x,
                             *pt,
                             join(*x, *pt)};
  }
  fail(ErrorCode::SeedExhaustion,
       "no admissible seed triple within " + std::to_string(opts.max_attempts) + " attempts");
}

RulerConstruction closing_line_construction(const Conic& c, std::span<const HomPoint> prefix,
                                            const SeedOptions& opts) {
  const ProjMap phi = compose_reversions(c, prefix);
  if (is_identity(phi)) {
    fail(ErrorCode::AlreadyClosing,
         "the given centers already close; the continuation is any P_{n-1} = P_n off the conic");
  }
  auto ruler = ruler_axis(c, [&](const HomPoint& a) { return chain_end(c, prefix, a); }, opts);
  for (const auto& [a, fa] : {std::pair{ruler.seeds[0], ruler.chain_ends[0]},
                              std::pair{ruler.seeds[1], ruler.chain_ends[1]}}) {
    if (apply_point(phi, a) != fa) {
      fail(ErrorCode::InternalInvariant, "chain trace disagrees with the composite map");
    }
  }
  if (apply_line(phi, ruler.line) != ruler.line) {
    fail(ErrorCode::InternalInvariant, "constructed line is not fixed by the composite");
  }
  return ruler;
}

HomLine closing_line(const Conic& c, std::span<const HomPoint> prefix, const SeedOptions& opts) {
  return closing_line_construction(c, prefix, opts).line;
}

namespace {

// kappa with M^T A M = kappa A, or nullopt if m does not preserve c.
std::optional<Scalar> similitude_factor(const Conic& c, const Mat3& m) {
  const Mat3& a = c.matrix();
  const Mat3 t = m.transpose() * a * m;
  std::size_t k = 0;
  while (a.entries()[k].is_zero()) ++k;
  const Scalar kappa = t.entries()[k] / a.entries()[k];
  if (t != kappa * a) return std::nullopt;
  return kappa;
}

}  // namespace

FixedElements fixed_elements(const Conic& c, const ProjMap& m, const SeedOptions& opts) {
  if (is_identity(m)) fail(ErrorCode::IdentityMap, "the identity fixes every line");
  if (!similitude_factor(c, m.matrix())) {
    fail(ErrorCode::InvalidConfiguration, "map does not preserve the conic");
  }
  const auto ruler = ruler_axis(c, [&](const HomPoint& a) { return apply_point(m, a); }, opts);
  FixedElements fe{ruler.line, pole(c, ruler.line), line_position(c, ruler.line), std::nullopt};
  if (const auto* s = std::get_if<Secant>(&fe.position)) {
    fe.tangents = std::array<HomLine, 2>{tangent_at(c, s->r), tangent_at(c, s->s)};
  }
  return fe;
}

std::optional<HomLine> spectral_fixed_line(const Conic& c, const ProjMap& m) {
  const Mat3& mm = m.matrix();
  const auto kappa = similitude_factor(c, mm);
  if (!kappa) return std::nullopt;
  const Scalar det = mm.det();
  // Eigenvalue of M at the pole is det / kappa; adj(M)^T = det M^{-T} then
  // has eigenvalue det^2 / kappa^2 on the polar line.
  const Scalar nu = (det / *kappa) * (det / *kappa);
  const Mat3 n = mm.adjugate().transpose() - nu * Mat3::identity();
  const auto ker = nullspace(n);
  if (ker.size() != 1) return std::nullopt;
  return HomLine(ker.front());
}

Completion complete_porism_detailed(const Conic& c, std::span<const HomPoint> prefix,
                                    const HomPoint& next, const SeedOptions& opts) {
  const RulerConstruction ruler = closing_line_construction(c, prefix, opts);
  const HomLine& ell = ruler.line;
  if (!incident(next, ell)) {
    std::ostringstream msg;
    msg << next << " is not on the closing line " << ell;
    fail(ErrorCode::CenterNotOnClosingLine, msg.str());
  }
  if (on_conic(c, next)) fail(ErrorCode::CenterOnConic, next.str() + " lies on the conic");

  const HomPoint base = base_point(c, opts);
  for (std::size_t k = opts.skip; k < opts.skip + opts.max_attempts; ++k) {
    const HomPoint a1 = rational_point(c, base, seed_parameter(k));
    if (incident(a1, ell)) continue;
    PolygonTrace chain = trace_polygon(c, prefix, a1);
    const HomPoint an = reversion_apply(c, next, chain.vertices.back());
    if (an == a1) continue;
    chain.vertices.push_back(an);
    const HomPoint last = meet(join(an, a1), ell);
    if (on_conic(c, last)) fail(ErrorCode::InternalInvariant, "completed center lies on the conic");
    chain.vertices.push_back(reversion_apply(c, last, an));
    chain.closed = chain.vertices.back() == a1;

    std::vector<HomPoint> full(prefix.begin(), prefix.end());
    full.push_back(next);
    full.push_back(last);
    if (!chain.closed || !closing_property(c, full)) {
      fail(ErrorCode::InternalInvariant, "completed centers do not close");
    }
    const ProjMap phi = compose_reversions(c, prefix);
    if (is_reversion(c, compose(reversion_matrix(c, next), phi)) != last) {
      fail(ErrorCode::InternalInvariant, "phi_{P_n} != phi_{P_{n-1}} o phi");
    }
    return Completion{last, ruler, std::move(chain)};
  }
  fail(ErrorCode::SeedExhaustion, "no admissible start for the completion chain");
}

HomPoint complete_porism(const Conic& c, std::span<const HomPoint> prefix, const HomPoint& next,
                         const SeedOptions& opts) {
  return complete_porism_detailed(c, prefix, next, opts).last;
}

namespace {

// Common line of points known to be collinear, or nullopt if all coincide.
std::optional<HomLine> common_line(std::span<const HomPoint> pts) {
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i] != pts[0]) {
      const HomLine l = join(pts[0], pts[i]);
      for (const auto& p : pts) {
        if (!incident(p, l)) fail(ErrorCode::NotCollinear, "centers are not collinear");
      }
      return l;
    }
  }
  return std::nullopt;
}

}  // namespace

SecantCriterion butterfly_secant_criterion(const Conic& c, std::span<const HomPoint, 4> p,
                                           const std::optional<HomLine>& line) {
  for (const auto& x : p) {
    if (on_conic(c, x)) fail(ErrorCode::CenterOnConic, x.str() + " lies on the conic");
  }
  std::optional<HomLine> l = common_line(p);
  if (!l) l = line;
  if (!l) fail(ErrorCode::InvalidConfiguration, "all centers coincide and no line was given");
  for (const auto& x : p) {
    if (!incident(x, *l)) fail(ErrorCode::PointNotOnLine, x.str() + " is not on " + l->str());
  }
  const auto pos = line_position(c, *l);
  if (std::holds_alternative<SecantIrrational>(pos)) {
    fail(ErrorCode::IrrationalIntersections, l->str() + " meets the conic in irrational points");
  }
  const auto* sec = std::get_if<Secant>(&pos);
  if (!sec) fail(ErrorCode::NotSecant, l->str() + " is not a secant");
  const CrossRatio outer = cross_ratio(sec->r, sec->s, p[0], p[3]);
  const CrossRatio inner = cross_ratio(sec->r, sec->s, p[1], p[2]);
  return SecantCriterion{outer == inner, sec->r, sec->s, outer, inner};
}

TangentCriterion butterfly_tangent_criterion(const Conic& c, const HomPoint& contact,
                                             std::span<const HomPoint, 4> p) {
  if (!on_conic(c, contact)) fail(ErrorCode::NotTangent, contact.str() + " is not on the conic");
  const HomLine t = polar(c, contact);
  for (const auto& x : p) {
    if (!incident(x, t)) fail(ErrorCode::NotTangent, x.str() + " is not on the tangent " + t.str());
    if (x == contact) fail(ErrorCode::CenterOnConic, "center at the point of contact");
  }
  // Affine coordinate with the contact point at infinity: v = [Z,P] / [P,R].
  const auto [z1, z2] = points_on(t);
  const HomPoint& z = (z1 == contact) ? z2 : z1;
  const auto coord = [&](const HomPoint& x) {
    return bracket(t, z.coords(), x.coords()) / bracket(t, x.coords(), contact.coords());
  };
  const bool affine = coord(p[0]) - coord(p[1]) + coord(p[2]) - coord(p[3]) == Scalar(0);
  if (p[0] == p[2]) return TangentCriterion{affine, std::nullopt};

  const CrossRatio lhs = cross_ratio(contact, p[2], p[0], p[3]);
  const CrossRatio rhs = cross_ratio(contact, p[0], p[2], p[1]);
  if ((lhs == rhs) != affine) {
    fail(ErrorCode::InternalInvariant, "tangent criterion forms disagree");
  }
  return TangentCriterion{lhs == rhs, std::pair{lhs, rhs}};
}

std::vector<HomPoint> conjugate_scene(const Conic& c, const HomLine& l,
                                      std::span<const HomPoint> centers) {
  if (std::holds_alternative<Tangent>(line_position(c, l))) {
    fail(ErrorCode::TangentLine, "conjugates on a tangent all collapse to the point of contact");
  }
  std::vector<HomPoint> out;
  out.reserve(centers.size());
  for (const auto& p : centers) out.push_back(conjugate_on_line(c, l, p));
  return out;
}

bool transfer_check(const PorismScene& scene, const Conic& d) {
  common_line(scene.centers());
  return closing_property(d, scene.centers());
}

HomPoint transfer_partner(const HomLine& l, const HomPoint& r, std::span<const HomPoint, 4> p) {
  if (!incident(r, l)) fail(ErrorCode::PointNotOnLine, r.str() + " is not on " + l.str());
  const auto [z1, z2] = points_on(l);
  const HomPoint& z = (z1 == r) ? z2 : z1;
  std::array<Scalar, 4> v;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!incident(p[i], l)) fail(ErrorCode::PointNotOnLine, p[i].str() + " is not on " + l.str());
    if (p[i] == r) fail(ErrorCode::InvalidConfiguration, "a center coincides with R'");
    v[i] = bracket(l, z.coords(), p[i].coords()) / bracket(l, p[i].coords(), r.coords());
  }
  // With R' at infinity: (s - v4)(s - v2) = (s - v3)(s - v1) is linear in s.
  const Scalar den = v[0] + v[2] - v[1] - v[3];
  if (den.is_zero()) return r;
  const Scalar s = (v[0] * v[2] - v[1] * v[3]) / den;
  // P = alpha Z + beta R has v = beta / alpha, so S' = Z + s R.
  return HomPoint(z.coords() + s * r.coords());
}

DualButterfly dual_butterfly_detailed(const Conic& c, std::span<const HomLine, 4> tangents,
                                      const HomPoint& l) {
  const auto each = [](auto f) { return std::array{f(0), f(1), f(2), f(3)}; };
  for (const auto& t : tangents) {
    if (!std::holds_alternative<Tangent>(line_position(c, t))) {
      fail(ErrorCode::NotTangentLine, t.str() + " is not tangent to the conic");
    }
  }
  const auto spokes = each([&](std::size_t i) {
    const HomLine& a = tangents[i];
    const HomLine& b = tangents[(i + 1) % 4];
    if (a == b) fail(ErrorCode::InvalidConfiguration, "consecutive tangents coincide");
    const HomPoint vertex = meet(a, b);
    if (vertex == l) fail(ErrorCode::InvalidConfiguration, "L is a vertex of the quadrilateral");
    return join(l, vertex);
  });
  DualButterfly out{false, each([&](std::size_t i) { return pole(c, tangents[i]); }), spokes,
                    each([&](std::size_t i) { return pole(c, spokes[i]); })};
  out.closes = closing_property(c, out.centers);
  return out;
}

bool dual_butterfly_check(const Conic& c, std::span<const HomLine, 4> tangents, const HomPoint& l) {
  return dual_butterfly_detailed(c, tangents, l).closes;
}

std::vector<HomLine> dual_chain(const Conic& c, std::span<const HomLine> spokes,
                                const HomLine& first_tangent) {
  if (!std::holds_alternative<Tangent>(line_position(c, first_tangent))) {
    fail(ErrorCode::NotTangentLine, first_tangent.str() + " is not tangent to the conic");
  }
  std::vector<HomLine> chain{first_tangent};
  for (const auto& spoke : spokes) {
    const HomLine& a = chain.back();
    const HomPoint vertex = meet(a, spoke);
    // The other tangent from the vertex touches where the vertex's polar
    // meets the conic again.
    const HomPoint touch = pole(c, a);
    const HomPoint other = second_intersection(c, touch, polar(c, vertex));
    chain.push_back(tangent_at(c, other));
  }
  return chain;
}

ImpossibilityReport noncollinear_impossibility_report(const Conic& c,
                                                      std::span<const HomPoint, 4> p) {
  ImpossibilityReport r{};
  r.closes = closing_property(c, p);
  r.fourth = is_reversion(c, compose_reversions(c, p.first<3>()));
  r.collinear = collinear(p[0], p[1], p[2]) && collinear(p[0], p[1], p[3]) &&
                collinear(p[0], p[2], p[3]) && collinear(p[1], p[2], p[3]);
  return r;
}

bool noncollinear_impossibility_check(const Conic& c, std::span<const HomPoint, 4> p) {
  const auto r = noncollinear_impossibility_report(c, p);
  return r.fourth && *r.fourth == p[3];
}

}  // namespace porism
