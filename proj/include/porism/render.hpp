#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "porism/scene.hpp"

namespace porism {

/// Which homogeneous coordinate is set to 1 for drawing.
enum class Chart { X3, X1, X2 };

std::optional<Chart> parse_chart(std::string_view s);

struct Viewport {
  Scalar xmin, ymin, xmax, ymax;
};

struct Style {
  std::string stroke;
  std::string fill;
  double width = 1.0;
};

struct RenderSpec {
  Chart chart = Chart::X3;
  /// Fitted to the finite scene points and bounded conics when absent.
  std::optional<Viewport> viewport;
  /// Keys: "conic", "line", "center", "seed", "point", "label". Missing keys
  /// use built-in defaults.
  std::map<std::string, Style> styles;
  /// Stroke colors for trace k, cycled.
  std::vector<std::string> trace_colors{"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd"};
  /// Significant digits of every float written to the SVG.
  int precision = 9;
  int width_px = 600;
  int conic_samples = 720;
};

/// One polygon traced through the porism centers.
struct Trace {
  std::vector<HomPoint> vertices;
  bool closed = false;
};

/// Deterministic SVG 1.1 document. Conics are drawn from a float sampling
/// of their pencil parametrization, lines are clipped to the viewport and
/// ideal points become arrows at the viewport boundary.
/// Throws UnboundedElement when a named point or line misses the viewport
/// or a conic has no sampled point inside it.
std::string render_svg(const SceneFile& scene, const std::vector<Trace>& traces,
                       const RenderSpec& spec = {});

/// Traces for starts rational_point(conic, base, start + k), k = 0..count-1,
/// on the named conic (the host when empty). The base is the first seed
/// point on that conic or a searched rational point.
std::vector<Trace> scene_traces(const SceneFile& scene, const Scalar& start, std::size_t count,
                                std::string_view conic = {});

}  // namespace porism
