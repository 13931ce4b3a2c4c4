#include "support.hpp"

#include <cstdint>
#include <string_view>

#include "porism/commands.hpp"

using namespace testing;

namespace {

const std::string kScenes = PORISM_SCENES_DIR;

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::size_t parse_error_column(std::string_view text, std::size_t* line) {
  try {
    parse_scene(text);
  } catch (const SceneParseError& e) {
    *line = e.line();
    return e.column();
  }
  FAIL("scene parsed");
  return 0;
}

}  // namespace

TEST_CASE("scene grammar") {
  const SceneFile s = parse_scene(
      "conic C = 1 0 0 1 0 -1  # unit circle\n"
      "point P = 1/2 0.25 1\n"
      "point A = 1 0 1 seed\n"
      "point Q = ? complete-me\n"
      "line l = 0 1 0\n"
      "porism = P Q\n");
  CHECK(s.host == "C");
  REQUIRE(s.find_point("P"));
  CHECK(*s.find_point("P")->point == HomPoint(2, 1, 4));
  CHECK(s.find_point("A")->role == Role::Seed);
  CHECK(s.placeholder() == std::optional<std::string>("Q"));
  CHECK(s.centers() == std::vector<HomPoint>{HomPoint(2, 1, 4)});
  CHECK(s.seeds() == std::vector<HomPoint>{HomPoint(1, 0, 1)});
  CHECK(s.find_line("l")->line == HomLine(0, 1, 0));
}

TEST_CASE("scene round trip") {
  for (const char* name : {"butterfly", "butterfly_complete", "heptagon", "radical_axis"}) {
    const SceneFile s = load_scene(kScenes + "/" + name + ".scene");
    const std::string once = serialize_scene(s);
    CHECK(serialize_scene(parse_scene(once)) == once);
    CHECK(parse_scene(once).centers() == s.centers());
  }
}

TEST_CASE("scene parse errors carry line and column") {
  std::size_t line = 0;
  CHECK(parse_error_column("conic C = 1 0 0 1 0 -1\npoint P = 1 x 1\n", &line) == 13);
  CHECK(line == 2);
  CHECK(parse_error_column("conic C = 1 0 0 1 0 -1\nporism = Z\n", &line) == 10);
  CHECK(line == 2);
  CHECK(parse_error_column("point P = 1 0 1\n", &line) == 1);
  CHECK(parse_error_column("conic C = 1 0 0 1 0 -1\nfrobnicate\n", &line) == 1);
  CHECK(line == 2);
  CHECK(parse_error_column("conic C = 1 0 0 1 0 -1\npoint P = 1 0 1 bogus\n", &line) == 17);
  CHECK(parse_error_column("conic C = 1 0 0 1 0 -1\npoint P = 1 0 1\npoint P = 2 0 1\n", &line) == 7);
  CHECK(line == 3);
  CHECK(parse_error_column("conic C = 1 0 0 1 0 -1\npoint Q = ? complete-me\npoint P = 2 0 1\nporism = Q P\n",
                           &line) == 10);
  CHECK(line == 4);
  CHECK(parse_error_column("conic C = 1 0 0 1 0 0\n", &line) == 11);
}

TEST_CASE("verify") {
  const CommandResult ok = cmd_verify(load_scene(kScenes + "/butterfly.scene"));
  CHECK(ok.exit_code == kSuccess);
  CHECK(ok.report.find("verdict: CLOSES") != std::string::npos);
  CHECK(ok.report.find("cr(R,S;P1,P4) = 2/3, cr(R,S;P2,P3) = 2/3") != std::string::npos);

  const CommandResult bad = cmd_verify(load_scene(kScenes + "/butterfly_perturbed.scene"));
  CHECK(bad.exit_code == kNotClosing);
  CHECK(bad.report.find("composite: [181 0 -19; 0 180 0; -19 0 181]") != std::string::npos);
  CHECK(bad.report.find("cr(R,S;P1,P4) = 3/5, cr(R,S;P2,P3) = 2/3") != std::string::npos);

  const SceneFile on_conic = load_scene(kScenes + "/bad_center.scene");
  try {
    cmd_verify(on_conic);
    FAIL("expected CenterOnConic");
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::CenterOnConic);
    CHECK(std::string(e.what()).find("center Q") != std::string::npos);
  }
}

TEST_CASE("complete fills the placeholder and the result verifies") {
  const CommandResult r = cmd_complete(load_scene(kScenes + "/butterfly_complete.scene"));
  CHECK(r.exit_code == kSuccess);
  CHECK(r.report.find("closing line = [0, 1, 0]") != std::string::npos);
  REQUIRE(r.document);
  const SceneFile amended = parse_scene(*r.document);
  CHECK(amended.centers().back() == HomPoint(1, 0, -5));
  CHECK(cmd_verify(amended).exit_code == kSuccess);

  const CommandResult tri = cmd_complete(load_scene(kScenes + "/triangle.scene"));
  CHECK(parse_scene(*tri.document).centers().back() == HomPoint(0, 1, 0));

  CompleteRequest off;
  off.next = HomPoint(0, 2, 1);
  CHECK(error_of([&] { cmd_complete(load_scene(kScenes + "/butterfly_complete.scene"), off); }) ==
        ErrorCode::CenterNotOnClosingLine);

  const SceneFile closing = parse_scene(
      "conic C = 1 0 0 1 0 -1\npoint P = 2 0 1\npoint Q = 2 0 1\npoint R = 3 0 1\nporism = P Q R\n");
  CHECK(error_of([&] { cmd_complete(closing); }) == ErrorCode::AlreadyClosing);
}

TEST_CASE("trace reports closed polygons") {
  const CommandResult r = cmd_trace(load_scene(kScenes + "/butterfly.scene"), q(1, 2), 3);
  CHECK(r.exit_code == kSuccess);
  CHECK(r.report.find("open") == std::string::npos);
  const CommandResult bad = cmd_trace(load_scene(kScenes + "/butterfly_perturbed.scene"), q(1, 2), 2);
  CHECK(bad.exit_code == kNotClosing);
}

TEST_CASE("render is deterministic and frozen") {
  const SceneFile scene = load_scene(kScenes + "/butterfly.scene");
  const RenderSpec spec;
  const std::string a = *cmd_render(scene, spec, q(1, 2), 2).document;
  const std::string b = *cmd_render(scene, spec, q(1, 2), 2).document;
  CHECK(a == b);
  CHECK(a.rfind("<?xml", 0) == 0);
  CHECK(a.find("<svg") != std::string::npos);
  CHECK(fnv1a(a) == PORISM_BUTTERFLY_SVG_HASH);

  RenderSpec coarse;
  coarse.precision = 3;
  CHECK(*cmd_render(scene, coarse, q(1, 2), 2).document != a);

  RenderSpec empty;
  empty.viewport = Viewport{1, 0, 1, 2};
  CHECK(error_of([&] { render_svg(scene, {}, empty); }) == ErrorCode::InvalidConfiguration);
  RenderSpec far;
  far.viewport = Viewport{10, 10, 12, 12};
  CHECK(error_of([&] { render_svg(scene, {}, far); }) == ErrorCode::UnboundedElement);
}

TEST_CASE("charts") {
  CHECK(parse_chart("x1") == Chart::X1);
  CHECK_FALSE(parse_chart("x4"));
  RenderSpec spec;
  spec.chart = Chart::X1;
  // The x-axis scene in the x1 = 1 chart: the ideal point (1,0,0) becomes finite.
  const SceneFile scene = parse_scene(
      "conic C = 1 0 0 1 0 -1\npoint P1 = 1 0 0\npoint P2 = 1 0 2\nporism = P1 P2\n");
  CHECK(render_svg(scene, {}, spec).find("<svg") != std::string::npos);
}

TEST_CASE("classic demonstrations") {
  const CommandResult r = cmd_classic();
  CHECK(r.exit_code == kSuccess);
  CHECK(r.report.find("Pappus") != std::string::npos);
  CHECK(r.report.find("determinant 0") != std::string::npos);
  CHECK(r.report.find("homothety") != std::string::npos);
}
