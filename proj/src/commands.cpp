#include "porism/commands.hpp"

#include <algorithm>
#include <sstream>

#include "porism/classic.hpp"
#include "porism/selftest.hpp"

namespace porism {

const char* const kAlreadyClosingExplanation =
    "the given centers already have the closing property; they are completed by any pair "
    "P_{n-1} = P_n off the conic, so there is no unique closing line";

namespace {

std::string describe_difference(const Mat3& m) {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j && !m(i, j).is_zero()) {
        return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               ") = " + m(i, j).str() + " where a multiple of the identity has 0";
      }
    }
  }
  for (std::size_t i = 1; i < 3; ++i) {
    if (m(i, i) != m(0, 0)) {
      return "diagonal entries (1,1) = " + m(0, 0).str() + " and (" + std::to_string(i + 1) + "," +
             std::to_string(i + 1) + ") = " + m(i, i).str() + " differ";
    }
  }
  return "matrix is a multiple of the identity";
}

SeedOptions seed_options(const PorismScene& ps) {
  SeedOptions opts;
  if (!ps.seeds().empty()) opts.base = ps.seeds().front();
  return opts;
}

std::string free_name(const SceneFile& scene, const std::string& wanted) {
  const auto taken = [&](const std::string& n) {
    return scene.find_point(n) || scene.find_line(n) ||
           std::any_of(scene.conics.begin(), scene.conics.end(),
                       [&](const NamedConic& c) { return c.name == n; });
  };
  if (!taken(wanted)) return wanted;
  for (int k = 2;; ++k) {
    const std::string n = wanted + "_" + std::to_string(k);
    if (!taken(n)) return n;
  }
}

}  // namespace

CommandResult cmd_verify(const SceneFile& scene) {
  const PorismScene ps = scene.to_scene();
  const auto names = scene.center_names();
  std::ostringstream out;
  out << "conic: " << ps.conic().str() << '\n';
  for (std::size_t i = 0; i < names.size(); ++i) {
    out << "center " << names[i] << ": " << ps.centers()[i] << '\n';
  }
  const ProjMap composite = compose_reversions(ps.conic(), ps.centers());
  out << "composite: " << composite.str() << '\n';
  const bool closes = is_identity(composite);
  out << "verdict: " << (closes ? "CLOSES" : "DOES NOT CLOSE") << '\n';
  if (!closes) out << "distinguishing: " << describe_difference(composite.matrix()) << '\n';

  if (ps.centers().size() == 4) {
    std::array<HomPoint, 4> p{ps.centers()[0], ps.centers()[1], ps.centers()[2],
                              ps.centers()[3]};
    try {
      const SecantCriterion sc = butterfly_secant_criterion(ps.conic(), p);
      out << "secant: R = " << sc.r << ", S = " << sc.s << '\n'
          << "cross-ratios: cr(R,S;P1,P4) = " << sc.outer.str()
          << ", cr(R,S;P2,P3) = " << sc.inner.str() << '\n';
    } catch (const GeometryError& e) {
      // Only collinear centers on a rationally cut secant have the criterion.
      out << "cross-ratios: not available (" << e.what() << ")\n";
    }
  }
  return {closes ? kSuccess : kNotClosing, out.str(), std::nullopt};
}

CommandResult cmd_complete(const SceneFile& scene, const CompleteRequest& request) {
  const PorismScene ps = scene.to_scene();
  std::vector<HomPoint> prefix = ps.centers();
  std::vector<std::string> names = scene.center_names();
  HomPoint next = HomPoint(1, 0, 0);
  std::string next_name;
  if (request.next) {
    next = *request.next;
    next_name = free_name(scene, request.next_name.empty() ? "Pnext" : request.next_name);
  } else {
    if (prefix.size() < 2) {
      fail(ErrorCode::InvalidConfiguration, "need at least one prefix center and P_{n-1}");
    }
    next = prefix.back();
    next_name = names.back();
    prefix.pop_back();
    names.pop_back();
  }
  if (prefix.empty()) fail(ErrorCode::InvalidConfiguration, "the prefix P_1..P_{n-2} is empty");
  if (on_conic(ps.conic(), next)) {
    fail(ErrorCode::CenterOnConic, "center " + next_name + " lies on the conic");
  }

  Completion done = [&] {
    try {
      return complete_porism_detailed(ps.conic(), prefix, next, seed_options(ps));
    } catch (const GeometryError& e) {
      if (e.code() == ErrorCode::AlreadyClosing) {
        fail(ErrorCode::AlreadyClosing, kAlreadyClosingExplanation);
      }
      throw;
    }
  }();

  std::ostringstream out;
  const RulerConstruction& r = done.ruler;
  const char* seed_names[3] = {"A1", "A1'", "A1''"};
  for (std::size_t i = 0; i < 3; ++i) {
    out << "seed " << seed_names[i] << " = " << r.seeds[i] << " -> " << r.chain_ends[i] << '\n';
  }
  out << "X = " << r.x << '\n' << "Y = " << r.y << '\n' << "closing line = " << r.line << '\n';
  out << "P_{n-1} = " << next_name << ' ' << next << " lies on the closing line\n";

  SceneFile amended = scene;
  const std::string last_name = scene.placeholder()
                                    ? *scene.placeholder()
                                    : free_name(scene, request.last_name);
  out << "P_n = " << last_name << ' ' << done.last << '\n';
  if (request.next) {
    amended.points.push_back({next_name, next, Role::Given});
    // Insert before a trailing placeholder so the order stays P_1..P_n.
    auto pos = amended.porism.end();
    if (scene.placeholder()) --pos;
    amended.porism.insert(pos, next_name);
  }
  if (scene.placeholder()) {
    for (auto& p : amended.points) {
      if (p.name == last_name) {
        p.point = done.last;
        p.role = Role::Given;
      }
    }
  } else {
    amended.points.push_back({last_name, done.last, Role::Given});
    amended.porism.push_back(last_name);
  }
  const bool has_line = std::any_of(amended.lines.begin(), amended.lines.end(),
                                    [&](const NamedLine& l) { return l.line == r.line; });
  if (!has_line) amended.lines.push_back({free_name(amended, "closing"), r.line});
  return {kSuccess, out.str(), serialize_scene(amended)};
}

CommandResult cmd_trace(const SceneFile& scene, const Scalar& start, std::size_t count) {
  const PorismScene ps = scene.to_scene();
  std::ostringstream out;
  const bool closes = closing_property(ps);
  if (!closes) out << "warning: the centers do not have the closing property\n";
  const auto traces = scene_traces(scene, start, count);
  bool all_closed = true;
  for (std::size_t k = 0; k < traces.size(); ++k) {
    out << "trace " << k << " (t = " << (start + Scalar(static_cast<long>(k))) << "):";
    for (const auto& v : traces[k].vertices) out << ' ' << v;
    out << (traces[k].closed ? " closed" : " open") << '\n';
    all_closed = all_closed && traces[k].closed;
  }
  return {all_closed ? kSuccess : kNotClosing, out.str(), std::nullopt};
}

CommandResult cmd_render(const SceneFile& scene, const RenderSpec& spec, const Scalar& start,
                         std::size_t traces) {
  std::vector<Trace> ts;
  if (traces > 0 && !scene.centers().empty()) {
    ts = scene_traces(scene, start, traces);
    // Further conics through none of the centers get their own traces.
    const auto centers = scene.centers();
    for (const auto& nc : scene.conics) {
      if (nc.name == scene.host) continue;
      if (std::any_of(centers.begin(), centers.end(),
                      [&](const HomPoint& p) { return on_conic(nc.conic, p); })) {
        continue;
      }
      try {
        const auto more = scene_traces(scene, start, traces, nc.name);
        ts.insert(ts.end(), more.begin(), more.end());
      } catch (const GeometryError& e) {
        if (e.code() != ErrorCode::SeedExhaustion) throw;
      }
    }
  }
  std::string svg = render_svg(scene, ts, spec);
  return {kSuccess, "rendered " + std::to_string(ts.size()) + " traces\n", std::move(svg)};
}

CommandResult cmd_selftest(std::size_t cases, std::uint64_t seed, const std::string& filter) {
  std::ostringstream out;
  bool ok = true;
  const auto results = run_selftest(cases, seed, filter);
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
    if (!r.passed) out << ": " << r.detail;
    out << '\n';
    ok = ok && r.passed;
  }
  out << results.size() << " suites, seed " << seed << '\n';
  return {ok ? kSuccess : kNotClosing, out.str(), std::nullopt};
}

CommandResult cmd_classic() {
  std::ostringstream out;
  const auto print = [&](const std::string& title, std::span<const HomPoint> before,
                         std::span<const HomPoint> after) {
    out << title << "\n  given:      ";
    for (const auto& v : before) out << ' ' << v;
    out << "\n  regenerated:";
    for (const auto& v : after) out << ' ' << v;
    out << "\n  closes\n";
  };

  const LinePair pair{HomLine(0, 1, 0), HomLine(1, -1, 0)};
  const std::array<HomPoint, 6> hex{HomPoint(1, 0, 1), HomPoint(2, 2, 1), HomPoint(3, 0, 1),
                                    HomPoint(4, 4, 1), HomPoint(5, 0, 1), HomPoint(7, 7, 1)};
  const auto pp = pascal_points(pair, hex);
  out << "Pappus points:";
  for (const auto& p : pp.points) out << ' ' << p;
  out << " (determinant " << pp.certificate << ")\n";
  print("Pappus", hex, pappus_regenerate(pair, hex, HomPoint(-2, 0, 1)));

  const Conic circle = Conic::unit_circle();
  const std::array<HomPoint, 6> ins{HomPoint(1, 0, 1),  HomPoint(3, 4, 5),   HomPoint(0, 1, 1),
                                    HomPoint(-4, 3, 5), HomPoint(-1, 0, 1), HomPoint(0, -1, 1)};
  const auto cp = pascal_points(circle, ins);
  out << "Pascal points:";
  for (const auto& p : cp.points) out << ' ' << p;
  out << " (determinant " << cp.certificate << ")\n";
  print("Pascal", ins, pascal_regenerate(circle, ins, HomPoint(5, 12, 13)));

  const LinePair rails{HomLine(0, 1, 0), HomLine(0, 1, -1)};
  const std::array<HomPoint, 4> quad{HomPoint(0, 0, 1), HomPoint(1, 1, 1), HomPoint(3, 0, 1),
                                     HomPoint(2, 1, 1)};
  const HomLine axis(1, 1, -10);
  std::array<HomPoint, 4> p{quad[0], quad[0], quad[0], quad[0]};
  for (std::size_t i = 0; i < 4; ++i) p[i] = meet(join(quad[i], quad[(i + 1) % 4]), axis);
  const auto sq = scissors_regenerate(rails, quad, p, HomPoint(-1, 0, 1));
  print("Scissors", quad, sq);
  const AffineRelation rel = affine_relation(axis, quad, sq);
  out << "  with the axis sent to infinity the quadrilaterals differ by a "
      << (rel == AffineRelation::Translation ? "translation"
          : rel == AffineRelation::Homothety ? "homothety"
                                             : "non-affine map")
      << '\n';
  return {kSuccess, out.str(), std::nullopt};
}

}  // namespace porism
