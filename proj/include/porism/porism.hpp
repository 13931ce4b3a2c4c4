#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "porism/reversion.hpp"

namespace porism {

/// A conic together with an ordered list of reversion centers P_1..P_k.
class PorismScene {
 public:
  /// Throws EmptyScene for no centers and CenterOnConic for a center on c.
  PorismScene(Conic c, std::vector<HomPoint> centers, std::optional<HomLine> line_hint = {},
              std::vector<HomPoint> seeds = {});

  const Conic& conic() const { return conic_; }
  const std::vector<HomPoint>& centers() const { return centers_; }
  const std::optional<HomLine>& line_hint() const { return line_hint_; }
  /// Rational points of the conic usable as chain seeds.
  const std::vector<HomPoint>& seeds() const { return seeds_; }

 private:
  Conic conic_;
  std::vector<HomPoint> centers_;
  std::optional<HomLine> line_hint_;
  std::vector<HomPoint> seeds_;
};

struct PolygonTrace {
  std::vector<HomPoint> vertices;  // A_1 .. A_{k+1}
  bool closed = false;
};

/// Fixed line l of a non-identity map preserving the conic, its pole, and
/// how l sits relative to the conic. For a rational secant the tangents at
/// R and S are the two further fixed lines.
struct FixedElements {
  HomLine line;
  HomPoint pole;
  LinePosition position;
  std::optional<std::array<HomLine, 2>> tangents;
};

/// Controls seed selection for the ruler construction. Seeds are taken as
/// rational_point(conic, base, t) over t = 0, 1, -1, 2, -2, ... starting at
/// index `skip`.
struct SeedOptions {
  std::optional<HomPoint> base;
  std::size_t skip = 0;
  std::size_t max_attempts = 64;
};

/// The k-th entry of the deterministic seed parameter sweep 0, 1, -1, 2, -2, ...
Scalar seed_parameter(std::size_t k);

/// Audit record of the ruler construction of the closing line.
struct RulerConstruction {
  std::array<HomPoint, 3> seeds;       // A_1, A_1', A_1''
  std::array<HomPoint, 3> chain_ends;  // phi(A_1), phi(A_1'), phi(A_1'')
  HomPoint x;                          // A_1 phi(A_1') meet A_1' phi(A_1)
  HomPoint y;                          // A_1 phi(A_1'') meet A_1'' phi(A_1)
  HomLine line;
};

bool closing_property(const PorismScene& scene);
bool closing_property(const Conic& c, std::span<const HomPoint> centers);

/// A_{i+1} = phi_{P_i}(A_i) for every center in order.
PolygonTrace trace_polygon(const PorismScene& scene, const HomPoint& a1);
PolygonTrace trace_polygon(const Conic& c, std::span<const HomPoint> centers, const HomPoint& a1);

/// Ruler construction of the axis of a non-identity map `image` on the conic.
/// `image` must send points of c to points of c.
RulerConstruction ruler_axis(const Conic& c, const std::function<HomPoint(const HomPoint&)>& image,
                             const SeedOptions& opts = {});

RulerConstruction closing_line_construction(const Conic& c, std::span<const HomPoint> prefix,
                                            const SeedOptions& opts = {});
/// The line carrying P_{n-1} and P_n for the prefix P_1..P_{n-2}.
/// Throws AlreadyClosing when the prefix closes by itself.
HomLine closing_line(const Conic& c, std::span<const HomPoint> prefix,
                     const SeedOptions& opts = {});

/// Throws IdentityMap, or InvalidConfiguration if m does not preserve c.
FixedElements fixed_elements(const Conic& c, const ProjMap& m, const SeedOptions& opts = {});

/// Fixed line obtained from the eigenvector of M^{-T} for the rational
/// eigenvalue det(M) / kappa (where M^T A M = kappa A). Empty if the
/// eigenspace is not one-dimensional.
std::optional<HomLine> spectral_fixed_line(const Conic& c, const ProjMap& m);

struct Completion {
  HomPoint last;  // P_n
  RulerConstruction ruler;
  PolygonTrace witness;  // the chain A_1..A_n, A_1 used to locate P_n
};

/// Given non-closing P_1..P_{n-2} and P_{n-1} on the closing line, the
/// unique P_n that closes the porism.
Completion complete_porism_detailed(const Conic& c, std::span<const HomPoint> prefix,
                                    const HomPoint& next, const SeedOptions& opts = {});
HomPoint complete_porism(const Conic& c, std::span<const HomPoint> prefix, const HomPoint& next,
                         const SeedOptions& opts = {});

struct SecantCriterion {
  bool closes;
  HomPoint r;
  HomPoint s;
  CrossRatio outer;  // cr(R,S;P1,P4)
  CrossRatio inner;  // cr(R,S;P2,P3)
};

/// cr(R,S;P1,P4) == cr(R,S;P2,P3) for four collinear centers on a secant
/// with rational intersections R, S. `line` is needed only when all four
/// centers coincide.
SecantCriterion butterfly_secant_criterion(const Conic& c, std::span<const HomPoint, 4> p,
                                           const std::optional<HomLine>& line = {});

struct TangentCriterion {
  bool closes;
  /// cr(R,P3;P1,P4) and cr(R,P1;P3,P2); absent when P1 == P3, where the
  /// reformulation degenerates to inf == inf and the reciprocal-distance
  /// form decides.
  std::optional<std::pair<CrossRatio, CrossRatio>> ratios;
};

TangentCriterion butterfly_tangent_criterion(const Conic& c, const HomPoint& contact,
                                             std::span<const HomPoint, 4> p);

/// Conjugates of centers on l. Throws TangentLine when l touches c.
std::vector<HomPoint> conjugate_scene(const Conic& c, const HomLine& l,
                                      std::span<const HomPoint> centers);

/// Closing property of the scene's centers with respect to d.
bool transfer_check(const PorismScene& scene, const Conic& d);

/// For R' on l, the point S' on l with cr(R',S';P1,P4) == cr(R',S';P2,P3).
/// Returns R' itself when the equation degenerates to a double root.
HomPoint transfer_partner(const HomLine& l, const HomPoint& r, std::span<const HomPoint, 4> p);

struct DualButterfly {
  bool closes;
  std::array<HomPoint, 4> contacts;   // poles of the tangents
  std::array<HomLine, 4> spokes;      // p_i = L joined with a_i meet a_{i+1}
  std::array<HomPoint, 4> centers;    // poles of p_i, on polar(L)
};

DualButterfly dual_butterfly_detailed(const Conic& c, std::span<const HomLine, 4> tangents,
                                      const HomPoint& l);
bool dual_butterfly_check(const Conic& c, std::span<const HomLine, 4> tangents, const HomPoint& l);

/// Circumscribed chain a'_1, a'_2, ... with a'_i meet a'_{i+1} on spokes[i],
/// built from tangents only. Returns the tangents a'_1..a'_5.
std::vector<HomLine> dual_chain(const Conic& c, std::span<const HomLine> spokes,
                                const HomLine& first_tangent);

struct ImpossibilityReport {
  bool closes;                     // phi_P4 phi_P3 phi_P2 phi_P1 == id
  std::optional<HomPoint> fourth;  // is_reversion(phi_P3 phi_P2 phi_P1)
  bool collinear;                  // all four on one line
};

ImpossibilityReport noncollinear_impossibility_report(const Conic& c,
                                                      std::span<const HomPoint, 4> p);
bool noncollinear_impossibility_check(const Conic& c, std::span<const HomPoint, 4> p);

}  // namespace porism
