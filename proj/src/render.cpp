#include "porism/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace porism {

std::optional<Chart> parse_chart(std::string_view s) {
  if (s == "x3") return Chart::X3;
  if (s == "x1") return Chart::X1;
  if (s == "x2") return Chart::X2;
  return std::nullopt;
}

namespace {

using D3 = std::array<double, 3>;

struct Pt {
  double x, y;
};

// Chart coordinate i is homogeneous coordinate perm[i]; the last one is set to 1.
std::array<std::size_t, 3> permutation(Chart c) {
  switch (c) {
    case Chart::X3: return {0, 1, 2};
    case Chart::X1: return {1, 2, 0};
    case Chart::X2: return {0, 2, 1};
  }
  return {0, 1, 2};
}

HomLine ideal_line(Chart c) {
  Vec3 v{0, 0, 0};
  v[permutation(c)[2]] = 1;
  return HomLine(v);
}

class Canvas {
 public:
  Canvas(const RenderSpec& spec, const Viewport& vp)
      : spec_(spec),
        perm_(permutation(spec.chart)),
        xmin_(vp.xmin.to_double()),
        ymin_(vp.ymin.to_double()),
        xmax_(vp.xmax.to_double()),
        ymax_(vp.ymax.to_double()) {
    scale_ = spec.width_px / (xmax_ - xmin_);
  }

  D3 chart(const Vec3& v) const {
    return {v[perm_[0]].to_double(), v[perm_[1]].to_double(), v[perm_[2]].to_double()};
  }
  std::array<std::array<double, 3>, 3> chart(const Mat3& m) const {
    std::array<std::array<double, 3>, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) out[i][j] = m(perm_[i], perm_[j]).to_double();
    }
    return out;
  }
  static std::optional<Pt> affine(const D3& h) {
    if (h[2] == 0.0) return std::nullopt;
    return Pt{h[0] / h[2], h[1] / h[2]};
  }

  double width() const { return spec_.width_px; }
  double height() const { return (ymax_ - ymin_) * scale_; }
  double xmin() const { return xmin_; }
  double xmax() const { return xmax_; }
  double ymin() const { return ymin_; }
  double ymax() const { return ymax_; }
  double span() const { return std::max(xmax_ - xmin_, ymax_ - ymin_); }
  Pt center() const { return {(xmin_ + xmax_) / 2, (ymin_ + ymax_) / 2}; }

  bool inside(Pt p, double margin = 0.0) const {
    const double m = margin * span();
    return p.x >= xmin_ - m && p.x <= xmax_ + m && p.y >= ymin_ - m && p.y <= ymax_ + m;
  }

  std::string num(double v) const {
    if (std::abs(v) < 1e-12) v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", spec_.precision, v);
    return buf;
  }
  double px(double x) const { return (x - xmin_) * scale_; }
  double py(double y) const { return (ymax_ - y) * scale_; }
  std::string sx(double x) const { return num(px(x)); }
  std::string sy(double y) const { return num(py(y)); }
  std::string xy(Pt p) const { return sx(p.x) + "," + sy(p.y); }

  // Liang-Barsky clip of a + t (b - a), t in [t0, t1], against the viewport.
  std::optional<std::pair<Pt, Pt>> clip(Pt a, Pt d, double t0, double t1) const {
    const double p[4] = {-d.x, d.x, -d.y, d.y};
    const double q[4] = {a.x - xmin_, xmax_ - a.x, a.y - ymin_, ymax_ - a.y};
    for (int i = 0; i < 4; ++i) {
      if (p[i] == 0.0) {
        if (q[i] < 0) return std::nullopt;
        continue;
      }
      const double r = q[i] / p[i];
      if (p[i] < 0) {
        t0 = std::max(t0, r);
      } else {
        t1 = std::min(t1, r);
      }
    }
    if (t0 > t1) return std::nullopt;
    return std::pair{Pt{a.x + t0 * d.x, a.y + t0 * d.y}, Pt{a.x + t1 * d.x, a.y + t1 * d.y}};
  }

  // Piece of the projective segment from h1 to h2 that is drawn for a polygon
  // edge: a finite segment, a ray toward an ideal endpoint, or nothing.
  std::optional<std::pair<Pt, Pt>> edge(const D3& h1, const D3& h2) const {
    const auto a = affine(h1);
    const auto b = affine(h2);
    if (a && b) return clip(*a, {b->x - a->x, b->y - a->y}, 0.0, 1.0);
    if (a) return clip(*a, {h2[0], h2[1]}, 0.0, 1e300);
    if (b) return clip(*b, {h1[0], h1[1]}, 0.0, 1e300);
    return std::nullopt;
  }

  const Style& style(const std::string& key) const {
    static const std::map<std::string, Style> defaults{
        {"conic", {"#000000", "none", 1.5}}, {"line", {"#777777", "none", 1.0}},
        {"center", {"#000000", "#000000", 1.0}}, {"seed", {"#000000", "#ffffff", 1.0}},
        {"point", {"#444444", "#444444", 1.0}}, {"label", {"none", "#000000", 0.0}},
        {"arrow", {"#000000", "#000000", 1.0}}};
    if (auto it = spec_.styles.find(key); it != spec_.styles.end()) return it->second;
    return defaults.at(key);
  }
  std::string stroke_attrs(const Style& s) const {
    return "stroke=\"" + s.stroke + "\" stroke-width=\"" + num(s.width) + "\" fill=\"" + s.fill +
           "\"";
  }

 private:
  const RenderSpec& spec_;
  std::array<std::size_t, 3> perm_;
  double xmin_, ymin_, xmax_, ymax_;
  double scale_;
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

double quad(const std::array<std::array<double, 3>, 3>& a, const D3& x, const D3& y) {
  double s = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) s += x[i] * a[i][j] * y[j];
  }
  return s;
}

// A real finite point of the conic in chart coordinates, searched along
// horizontal and vertical lines spreading out from the viewport center.
std::optional<Pt> real_point(const std::array<std::array<double, 3>, 3>& a, Pt c, double span) {
  for (int k = 0; k <= 400; ++k) {
    const double off = (k % 2 == 0 ? 1 : -1) * ((k + 1) / 2) * span / 40.0;
    for (int axis = 0; axis < 2; ++axis) {
      // Restrict to the line {axis coordinate fixed}; the free coordinate u solves
      // a2 u^2 + 2 a1 u + a0 = 0.
      D3 base{c.x, c.y, 1.0};
      D3 dir{0, 0, 0};
      if (axis == 0) {
        base[1] += off;
        dir[0] = 1;
      } else {
        base[0] += off;
        dir[1] = 1;
      }
      base[axis == 0 ? 0 : 1] = 0;
      const double a2 = quad(a, dir, dir);
      const double a1 = quad(a, dir, base);
      const double a0 = quad(a, base, base);
      // Root nearest the viewport center.
      const double target = axis == 0 ? c.x : c.y;
      double u;
      if (std::abs(a2) < 1e-300) {
        if (a1 == 0) continue;
        u = -a0 / (2 * a1);
      } else {
        const double disc = a1 * a1 - a2 * a0;
        if (disc < 0) continue;
        const double u1 = (-a1 + std::sqrt(disc)) / a2;
        const double u2 = (-a1 - std::sqrt(disc)) / a2;
        u = std::abs(u1 - target) < std::abs(u2 - target) ? u1 : u2;
      }
      return Pt{base[0] + u * dir[0], base[1] + u * dir[1]};
    }
  }
  return std::nullopt;
}

// Polyline pieces of the conic: second intersections of the lines through
// b with direction angle theta in [0, pi]. A sign change of the third
// homogeneous coordinate means the sample passed through infinity.
std::vector<std::vector<Pt>> conic_pieces(const Canvas& cv,
                                          const std::array<std::array<double, 3>, 3>& a, Pt b,
                                          int samples, bool& closed_loop) {
  const D3 bh{b.x, b.y, 1.0};
  std::vector<std::vector<Pt>> pieces(1);
  double prev_w = 0.0;
  bool crossed = false;
  bool first_added = false;
  bool last_added = false;
  for (int k = 0; k <= samples; ++k) {
    const double th = std::numbers::pi * k / samples;
    const D3 d{std::cos(th), std::sin(th), 0.0};
    const double w = quad(a, d, d);
    const double m = quad(a, d, bh);
    const D3 x{w * bh[0] - 2 * m * d[0], w * bh[1] - 2 * m * d[1], w};
    const bool sign_change = k > 0 && (w == 0.0 || (prev_w > 0) != (w > 0));
    prev_w = w;
    if (sign_change) {
      crossed = true;
      if (!pieces.back().empty()) pieces.emplace_back();
    }
    if (w == 0.0) continue;
    const Pt p{x[0] / x[2], x[1] / x[2]};
    if (!cv.inside(p, 2.0)) {
      if (!pieces.back().empty()) pieces.emplace_back();
      continue;
    }
    pieces.back().push_back(p);
    if (k == 0) first_added = true;
    if (k == samples) last_added = true;
  }
  if (pieces.back().empty()) pieces.pop_back();
  closed_loop = !crossed && pieces.size() == 1 && first_added && last_added;
  if (closed_loop) {
    pieces.front().pop_back();  // theta = pi repeats theta = 0
  } else if (pieces.size() > 1 && first_added && last_added) {
    // theta = 0 and theta = pi are the same sample: join across the seam.
    auto& last = pieces.back();
    last.insert(last.end(), pieces.front().begin() + 1, pieces.front().end());
    pieces.erase(pieces.begin());
  }
  std::erase_if(pieces, [](const auto& p) { return p.size() < 2; });
  return pieces;
}

Viewport fit_viewport(const SceneFile& scene, const std::vector<Trace>& traces,
                      const RenderSpec& spec) {
  const auto perm = permutation(spec.chart);
  std::vector<Pt> pts;
  const auto add = [&](const HomPoint& p) {
    const Vec3& v = p.coords();
    if (v[perm[2]].is_zero()) return;
    pts.push_back({(v[perm[0]] / v[perm[2]]).to_double(), (v[perm[1]] / v[perm[2]]).to_double()});
  };
  for (const auto& p : scene.points) {
    if (p.point) add(*p.point);
  }
  for (const auto& t : traces) {
    for (const auto& v : t.vertices) add(v);
  }
  const HomLine ideal = ideal_line(spec.chart);
  for (const auto& c : scene.conics) {
    if (!std::holds_alternative<Missing>(line_position(c.conic, ideal))) continue;
    // Bounded in this chart: include its extreme points.
    const Viewport probe{Scalar(-1), Scalar(-1), Scalar(1), Scalar(1)};
    Canvas cv(spec, probe);
    const auto a = cv.chart(c.conic.matrix());
    const auto b = real_point(a, {0, 0}, 2.0);
    if (!b) continue;
    // Large canvas so nothing is dropped while sampling.
    Canvas wide(spec, {Scalar(-1000000), Scalar(-1000000), Scalar(1000000), Scalar(1000000)});
    bool loop = false;
    for (const auto& piece : conic_pieces(wide, a, *b, 360, loop)) {
      pts.insert(pts.end(), piece.begin(), piece.end());
    }
  }
  double xmin = -2, xmax = 2, ymin = -2, ymax = 2;
  if (!pts.empty()) {
    xmin = xmax = pts[0].x;
    ymin = ymax = pts[0].y;
    for (const auto& p : pts) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1.0});
  const double pad = 0.12 * span;
  const auto lo = [](double v) { return Scalar(static_cast<long>(std::floor(v * 100)), 100); };
  const auto hi = [](double v) { return Scalar(static_cast<long>(std::ceil(v * 100)), 100); };
  const double cx = (xmin + xmax) / 2;
  const double cy = (ymin + ymax) / 2;
  const double hx = std::max(xmax - xmin, 0.5 * span) / 2 + pad;
  const double hy = std::max(ymax - ymin, 0.5 * span) / 2 + pad;
  return {lo(cx - hx), lo(cy - hy), hi(cx + hx), hi(cy + hy)};
}

}  // namespace

std::string render_svg(const SceneFile& scene, const std::vector<Trace>& traces,
                       const RenderSpec& spec) {
  const Viewport vp = spec.viewport ? *spec.viewport : fit_viewport(scene, traces, spec);
  if (!(vp.xmin < vp.xmax) || !(vp.ymin < vp.ymax)) {
    fail(ErrorCode::InvalidConfiguration, "viewport is empty");
  }
  if (spec.precision < 1 || spec.precision > 17) {
    fail(ErrorCode::InvalidConfiguration, "precision must be between 1 and 17");
  }
  const Canvas cv(spec, vp);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << cv.num(cv.width())
      << "\" height=\"" << cv.num(cv.height()) << "\" viewBox=\"0 0 " << cv.num(cv.width()) << ' '
      << cv.num(cv.height()) << "\">\n"
      << "<!-- viewport x in [" << vp.xmin << ", " << vp.xmax << "], y in [" << vp.ymin << ", "
      << vp.ymax << "] -->\n"
      << "<defs><clipPath id=\"viewport\"><rect x=\"0\" y=\"0\" width=\"" << cv.num(cv.width())
      << "\" height=\"" << cv.num(cv.height()) << "\"/></clipPath></defs>\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << cv.num(cv.width()) << "\" height=\""
      << cv.num(cv.height()) << "\" fill=\"#ffffff\"/>\n"
      << "<g clip-path=\"url(#viewport)\">\n";

  for (const auto& nc : scene.conics) {
    const auto a = cv.chart(nc.conic.matrix());
    // Prefer an exact point of the conic that is visible; samples cluster near it.
    std::optional<Pt> b;
    for (const auto& np : scene.points) {
      if (!np.point || !on_conic(nc.conic, *np.point)) continue;
      const auto p = Canvas::affine(cv.chart(np.point->coords()));
      if (p && cv.inside(*p)) {
        b = p;
        break;
      }
    }
    if (!b) b = real_point(a, cv.center(), cv.span());
    std::vector<std::vector<Pt>> pieces;
    bool loop = false;
    if (b) pieces = conic_pieces(cv, a, *b, spec.conic_samples, loop);
    const bool visible = std::any_of(pieces.begin(), pieces.end(), [&](const auto& piece) {
      return std::any_of(piece.begin(), piece.end(), [&](Pt p) { return cv.inside(p); });
    });
    if (!visible) {
      fail(ErrorCode::UnboundedElement, "conic " + nc.name + " does not enter the viewport");
    }
    out << "<path id=\"conic-" << escape(nc.name) << "\" " << cv.stroke_attrs(cv.style("conic"))
        << " d=\"";
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (i) out << ' ';
      for (std::size_t j = 0; j < pieces[i].size(); ++j) {
        out << (j == 0 ? "M" : " L") << cv.xy(pieces[i][j]);
      }
      if (loop) out << " Z";
    }
    out << "\"/>\n";
  }

  for (const auto& nl : scene.lines) {
    const D3 l = cv.chart(nl.line.coords());
    if (l[0] == 0.0 && l[1] == 0.0) {
      out << "<!-- line " << escape(nl.name) << " is the ideal line of this chart -->\n";
      continue;
    }
    // Foot of the perpendicular from the origin, then the direction (-l1, l0).
    const double n2 = l[0] * l[0] + l[1] * l[1];
    const Pt foot{-l[2] * l[0] / n2, -l[2] * l[1] / n2};
    const auto seg = cv.clip(foot, {-l[1], l[0]}, -1e300, 1e300);
    if (!seg) fail(ErrorCode::UnboundedElement, "line " + nl.name + " misses the viewport");
    out << "<line id=\"line-" << escape(nl.name) << "\" x1=\"" << cv.sx(seg->first.x)
        << "\" y1=\"" << cv.sy(seg->first.y) << "\" x2=\"" << cv.sx(seg->second.x) << "\" y2=\""
        << cv.sy(seg->second.y) << "\" " << cv.stroke_attrs(cv.style("line")) << "/>\n";
  }

  for (std::size_t k = 0; k < traces.size(); ++k) {
    const Trace& t = traces[k];
    const std::string& color = spec.trace_colors[k % spec.trace_colors.size()];
    std::vector<D3> v;
    for (const auto& p : t.vertices) v.push_back(cv.chart(p.coords()));
    // A closed trace repeats A_1 at the end.
    const std::size_t edges = v.size() - 1;
    out << "<path id=\"trace-" << k << "\" stroke=\"" << color
        << "\" stroke-width=\"1.2\" fill=\"none\" d=\"";
    bool first = true;
    for (std::size_t i = 0; i < edges; ++i) {
      const auto seg = cv.edge(v[i], v[i + 1]);
      if (!seg) continue;
      if (!first) out << ' ';
      first = false;
      out << 'M' << cv.xy(seg->first) << " L" << cv.xy(seg->second);
    }
    out << "\"/>\n";
  }
  out << "</g>\n";

  const auto label = [&](Pt at, const std::string& text) {
    const Style& s = cv.style("label");
    out << "<text x=\"" << cv.num(cv.px(at.x) + 6) << "\" y=\""
        << cv.num(cv.py(at.y) - 6) << "\" font-family=\"sans-serif\" font-size=\"12\" "
        << "fill=\"" << s.fill << "\">" << escape(text) << "</text>\n";
  };
  for (const auto& np : scene.points) {
    if (!np.point) continue;
    const D3 h = cv.chart(np.point->coords());
    const bool is_center =
        std::find(scene.porism.begin(), scene.porism.end(), np.name) != scene.porism.end();
    const Style& s =
        cv.style(np.role == Role::Seed ? "seed" : is_center ? "center" : "point");
    if (const auto p = Canvas::affine(h)) {
      if (!cv.inside(*p)) {
        fail(ErrorCode::UnboundedElement, "point " + np.name + " lies outside the viewport");
      }
      out << "<circle id=\"point-" << escape(np.name) << "\" cx=\"" << cv.sx(p->x) << "\" cy=\""
          << cv.sy(p->y) << "\" r=\"3.5\" " << cv.stroke_attrs(s) << "/>\n";
      label(*p, np.name);
      continue;
    }
    // Ideal point: arrow from inside the viewport to where the ray from the
    // center toward the direction leaves it.
    const Pt c = cv.center();
    const auto ray = cv.clip(c, {h[0], h[1]}, 0.0, 1e300);
    const double len = std::hypot(h[0], h[1]);
    const Pt tip = ray->second;
    const Pt u{h[0] / len, h[1] / len};
    const double shaft = 0.08 * cv.span();
    const double head = 0.025 * cv.span();
    const Pt tail{tip.x - shaft * u.x, tip.y - shaft * u.y};
    const Pt base{tip.x - head * u.x, tip.y - head * u.y};
    const Pt left{base.x - 0.5 * head * u.y, base.y + 0.5 * head * u.x};
    const Pt right{base.x + 0.5 * head * u.y, base.y - 0.5 * head * u.x};
    const Style& as = cv.style("arrow");
    out << "<g id=\"point-" << escape(np.name) << "\"><line x1=\"" << cv.sx(tail.x) << "\" y1=\""
        << cv.sy(tail.y) << "\" x2=\"" << cv.sx(base.x) << "\" y2=\"" << cv.sy(base.y) << "\" "
        << cv.stroke_attrs(as) << "/><polygon points=\"" << cv.xy(tip) << ' ' << cv.xy(left)
        << ' ' << cv.xy(right) << "\" stroke=\"" << as.stroke << "\" fill=\"" << as.fill
        << "\"/></g>\n";
    label(tail, np.name);
  }
  out << "</svg>\n";
  return out.str();
}

std::vector<Trace> scene_traces(const SceneFile& scene, const Scalar& start, std::size_t count,
                                std::string_view conic) {
  const PorismScene host = scene.to_scene();
  const Conic* c = &host.conic();
  if (!conic.empty()) {
    const auto it = std::find_if(scene.conics.begin(), scene.conics.end(),
                                 [&](const NamedConic& nc) { return nc.name == conic; });
    if (it == scene.conics.end()) {
      fail(ErrorCode::InvalidConfiguration, "unknown conic " + std::string(conic));
    }
    c = &it->conic;
  }
  const PorismScene ps(*c, host.centers());
  std::optional<HomPoint> base;
  for (const auto& s : scene.seeds()) {
    if (on_conic(*c, s)) {
      base = s;
      break;
    }
  }
  if (!base) base = find_rational_point(*c);
  if (!base) fail(ErrorCode::SeedExhaustion, "no rational point found on the conic");
  std::vector<Trace> out;
  for (std::size_t k = 0; k < count; ++k) {
    const HomPoint a1 = rational_point(*c, *base, start + Scalar(static_cast<long>(k)));
    const PolygonTrace pt = trace_polygon(ps, a1);
    out.push_back({pt.vertices, pt.closed});
  }
  return out;
}

}  // namespace porism
