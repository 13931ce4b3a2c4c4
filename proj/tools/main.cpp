#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "porism/commands.hpp"

using namespace porism;

namespace {

std::vector<std::string> split_numbers(const std::string& s) {
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

HomPoint parse_point(const std::string& s) {
  const auto parts = split_numbers(s);
  if (parts.size() != 3) throw std::invalid_argument("expected three coordinates, got '" + s + "'");
  return HomPoint(Scalar::parse(parts[0]), Scalar::parse(parts[1]), Scalar::parse(parts[2]));
}

Viewport parse_viewport(const std::string& s) {
  const auto parts = split_numbers(s);
  if (parts.size() != 4) throw std::invalid_argument("viewport needs xmin,ymin,xmax,ymax");
  return {Scalar::parse(parts[0]), Scalar::parse(parts[1]), Scalar::parse(parts[2]),
          Scalar::parse(parts[3])};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact reversion porisms on conics"};
  app.require_subcommand(1);

  std::string scene_path;
  std::string out_path;
  std::uint64_t seed = 1;
  std::size_t cases = 100;
  std::string start_text = "1/2";
  std::size_t traces = 2;
  std::string chart_text = "x3";
  int precision = 9;
  std::string next_text;
  std::string viewport_text;
  std::string filter;

  auto* verify = app.add_subcommand("verify", "Decide the closing property of a scene");
  verify->add_option("--scene", scene_path, "Scene file")->required();

  auto* complete = app.add_subcommand("complete", "Complete a non-closing prefix by ruler");
  complete->add_option("--scene", scene_path, "Scene file")->required();
  complete->add_option("--next", next_text,
                       "P_{n-1} as a point name or \"x,y,z\" (default: last porism center)");
  complete->add_option("--out", out_path, "Where to write the amended scene");

  auto* trace = app.add_subcommand("trace", "Trace polygons through the centers");
  trace->add_option("--scene", scene_path, "Scene file")->required();
  trace->add_option("--start", start_text, "Parameter of the first start (rational)");
  trace->add_option("--count", traces, "Number of traces");

  auto* render = app.add_subcommand("render", "Draw the scene as SVG");
  render->add_option("--scene", scene_path, "Scene file")->required();
  render->add_option("--out", out_path, "SVG path (stdout when absent)");
  render->add_option("--start", start_text, "Parameter of the first traced start (rational)");
  render->add_option("--traces", traces, "Number of traced polygons");
  render->add_option("--chart", chart_text, "Affine chart")->check(CLI::IsMember({"x3", "x1", "x2"}));
  render->add_option("--precision", precision, "Significant digits in the SVG")
      ->check(CLI::Range(1, 17));
  render->add_option("--viewport", viewport_text, "xmin,ymin,xmax,ymax (rational)");

  auto* selftest = app.add_subcommand("selftest", "Run the randomized property suites");
  selftest->add_option("--seed", seed, "Random seed");
  selftest->add_option("--cases", cases, "Cases per suite");
  selftest->add_option("--filter", filter, "Only suites whose name starts with this");

  auto* classic = app.add_subcommand("classic", "Pappus, Pascal and Scissors demonstrations");

  CLI11_PARSE(app, argc, argv);

  try {
    CommandResult result;
    if (*selftest) {
      result = cmd_selftest(cases, seed, filter);
    } else if (*classic) {
      result = cmd_classic();
    } else {
      const SceneFile scene = load_scene(scene_path);
      if (*verify) {
        result = cmd_verify(scene);
      } else if (*complete) {
        CompleteRequest req;
        if (!next_text.empty()) {
          if (const NamedPoint* p = scene.find_point(next_text)) {
            if (!p->point) throw std::invalid_argument(next_text + " has no coordinates");
            if (std::find(scene.porism.begin(), scene.porism.end(), next_text) !=
                scene.porism.end()) {
              throw std::invalid_argument(next_text + " is already a porism center");
            }
            req.next = *p->point;
            req.next_name = next_text;
          } else {
            req.next = parse_point(next_text);
          }
        }
        result = cmd_complete(scene, req);
        if (!out_path.empty()) {
          write_output(out_path, *result.document);
        } else {
          result.report += "\n" + *result.document;
        }
      } else if (*trace) {
        result = cmd_trace(scene, Scalar::parse(start_text), traces);
      } else if (*render) {
        RenderSpec spec;
        spec.chart = *parse_chart(chart_text);
        spec.precision = precision;
        if (!viewport_text.empty()) spec.viewport = parse_viewport(viewport_text);
        result = cmd_render(scene, spec, Scalar::parse(start_text), traces);
        write_output(out_path, *result.document);
        if (out_path.empty() || out_path == "-") result.report.clear();
      }
    }
    if (!result.report.empty()) std::cout << result.report;
    return result.exit_code;
  } catch (const SceneParseError& e) {
    std::cerr << scene_path << ": " << e.what() << '\n';
    return kInputError;
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InternalInvariant ? kInternalError : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
