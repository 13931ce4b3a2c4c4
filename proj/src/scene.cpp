#include "porism/scene.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace porism {

std::string_view to_string(Role r) {
  switch (r) {
    case Role::Given: return "given";
    case Role::CompleteMe: return "complete-me";
    case Role::Seed: return "seed";
  }
  return "given";
}

const Conic& SceneFile::host_conic() const {
  if (conics.empty()) fail(ErrorCode::InvalidConfiguration, "scene has no conic");
  for (const auto& c : conics) {
    if (c.name == host) return c.conic;
  }
  return conics.front().conic;
}

const NamedPoint* SceneFile::find_point(std::string_view name) const {
  for (const auto& p : points) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

const NamedLine* SceneFile::find_line(std::string_view name) const {
  for (const auto& l : lines) {
    if (l.name == name) return &l;
  }
  return nullptr;
}

std::vector<HomPoint> SceneFile::centers() const {
  std::vector<HomPoint> out;
  for (const auto& name : porism) {
    const NamedPoint* p = find_point(name);
    if (p && p->point) out.push_back(*p->point);
  }
  return out;
}

std::vector<std::string> SceneFile::center_names() const {
  std::vector<std::string> out;
  for (const auto& name : porism) {
    const NamedPoint* p = find_point(name);
    if (p && p->point) out.push_back(name);
  }
  return out;
}

std::vector<HomPoint> SceneFile::seeds() const {
  std::vector<HomPoint> out;
  for (const auto& p : points) {
    if (p.role == Role::Seed && p.point) out.push_back(*p.point);
  }
  return out;
}

std::optional<std::string> SceneFile::placeholder() const {
  if (porism.empty()) return std::nullopt;
  const NamedPoint* p = find_point(porism.back());
  if (p && p->role == Role::CompleteMe && !p->point) return p->name;
  return std::nullopt;
}

PorismScene SceneFile::to_scene() const {
  const Conic& c = host_conic();
  for (const auto& name : center_names()) {
    if (on_conic(c, *find_point(name)->point)) {
      fail(ErrorCode::CenterOnConic, "center " + name + " lies on the conic");
    }
  }
  std::vector<HomPoint> host_seeds;
  for (const auto& p : points) {
    if (p.role != Role::Seed || !p.point) continue;
    if (on_conic(c, *p.point)) {
      host_seeds.push_back(*p.point);
    } else if (std::none_of(conics.begin(), conics.end(),
                            [&](const NamedConic& nc) { return on_conic(nc.conic, *p.point); })) {
      fail(ErrorCode::PointNotOnConic, "seed " + p.name + " is on no conic of the scene");
    }
  }
  return PorismScene(c, centers(), std::nullopt, host_seeds);
}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char ch = line[i];
    if (ch == '#') break;
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      continue;
    }
    if (ch == '=') {
      out.push_back({"=", i + 1});
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#' && line[i] != '=') {
      ++i;
    }
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '-';
  });
}

class LineParser {
 public:
  LineParser(std::size_t line_no, std::vector<Token> tokens, std::size_t line_len)
      : line_no_(line_no), tokens_(std::move(tokens)), line_len_(line_len) {}

  [[noreturn]] void error(const std::string& msg) const {
    const std::size_t col = pos_ < tokens_.size() ? tokens_[pos_].column : line_len_ + 1;
    throw SceneParseError(line_no_, col, msg);
  }
  [[noreturn]] void error_at(std::size_t token, const std::string& msg) const {
    throw SceneParseError(line_no_, tokens_[token].column, msg);
  }

  bool done() const { return pos_ >= tokens_.size(); }
  const Token& peek() const {
    if (done()) error("unexpected end of line");
    return tokens_[pos_];
  }
  std::size_t position() const { return pos_; }
  Token next() {
    const Token& t = peek();
    ++pos_;
    return t;
  }
  void expect(std::string_view text) {
    if (done() || tokens_[pos_].text != text) error("expected '" + std::string(text) + "'");
    ++pos_;
  }
  std::string name() {
    Token t = next();
    if (!valid_name(t.text)) {
      --pos_;
      error("invalid name '" + t.text + "'");
    }
    return t.text;
  }
  Scalar number() {
    Token t = next();
    try {
      return Scalar::parse(t.text);
    } catch (const std::exception&) {
      --pos_;
      error("invalid rational '" + t.text + "'");
    }
  }
  void finish() {
    if (!done()) error("unexpected token '" + tokens_[pos_].text + "'");
  }

 private:
  std::size_t line_no_;
  std::vector<Token> tokens_;
  std::size_t line_len_;
  std::size_t pos_ = 0;
};

struct PendingPorism {
  std::size_t line;
  std::vector<Token> names;
  std::optional<Token> host;
};

}  // namespace

SceneFile parse_scene(std::string_view text) {
  SceneFile scene;
  std::set<std::string> names;
  std::optional<PendingPorism> pending;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    auto tokens = tokenize(raw);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    LineParser lp(line_no, tokens, raw.size());
    const Token keyword = lp.next();
    const auto declare = [&](const std::string& name, std::size_t token) {
      if (!names.insert(name).second) lp.error_at(token, "duplicate name '" + name + "'");
    };

    if (keyword.text == "conic") {
      const std::size_t at = lp.position();
      const std::string name = lp.name();
      declare(name, at);
      lp.expect("=");
      const std::size_t first = lp.position();
      std::array<Scalar, 6> e;
      for (auto& x : e) x = lp.number();
      lp.finish();
      try {
        scene.conics.push_back(
            {name, Conic::from_coefficients(e[0], e[1], e[2], e[3], e[4], e[5])});
      } catch (const GeometryError& err) {
        lp.error_at(first, err.what());
      }
    } else if (keyword.text == "point") {
      const std::size_t at = lp.position();
      const std::string name = lp.name();
      declare(name, at);
      lp.expect("=");
      NamedPoint np{name, std::nullopt, Role::Given};
      const std::size_t first = lp.position();
      if (lp.peek().text == "?") {
        lp.next();
      } else {
        Vec3 v;
        for (auto& x : v) x = lp.number();
        if (is_zero(v)) lp.error_at(first, "point has all-zero coordinates");
        np.point = HomPoint(v);
      }
      if (!lp.done()) {
        const Token role = lp.next();
        if (role.text == "given") {
          np.role = Role::Given;
        } else if (role.text == "complete-me") {
          np.role = Role::CompleteMe;
        } else if (role.text == "seed") {
          np.role = Role::Seed;
        } else {
          lp.error_at(lp.position() - 1, "unknown role '" + role.text + "'");
        }
      }
      lp.finish();
      if (!np.point && np.role != Role::CompleteMe) {
        lp.error_at(first, "only a complete-me point may omit its coordinates");
      }
      scene.points.push_back(std::move(np));
    } else if (keyword.text == "line") {
      const std::size_t at = lp.position();
      const std::string name = lp.name();
      declare(name, at);
      lp.expect("=");
      const std::size_t first = lp.position();
      Vec3 v;
      for (auto& x : v) x = lp.number();
      lp.finish();
      if (is_zero(v)) lp.error_at(first, "line has all-zero coordinates");
      scene.lines.push_back({name, HomLine(v)});
    } else if (keyword.text == "porism") {
      if (pending) lp.error_at(0, "second porism statement");
      PendingPorism pp{line_no, {}, std::nullopt};
      if (!lp.done() && lp.peek().text == "on") {
        lp.next();
        const std::size_t at = lp.position();
        lp.name();
        pp.host = tokens[at];
      }
      lp.expect("=");
      while (!lp.done()) {
        const std::size_t at = lp.position();
        lp.name();
        pp.names.push_back(tokens[at]);
      }
      if (pp.names.empty()) lp.error("porism needs at least one center");
      pending = std::move(pp);
    } else {
      lp.error_at(0, "unknown statement '" + keyword.text + "'");
    }
    if (end == text.size()) break;
  }

  if (scene.conics.empty()) throw SceneParseError(line_no, 1, "scene declares no conic");
  scene.host = scene.conics.front().name;
  if (pending) {
    if (pending->host) {
      const auto& h = *pending->host;
      const bool found = std::any_of(scene.conics.begin(), scene.conics.end(),
                                     [&](const NamedConic& c) { return c.name == h.text; });
      if (!found) throw SceneParseError(pending->line, h.column, "unknown conic '" + h.text + "'");
      scene.host = h.text;
    }
    for (std::size_t i = 0; i < pending->names.size(); ++i) {
      const Token& t = pending->names[i];
      const NamedPoint* p = scene.find_point(t.text);
      if (!p) throw SceneParseError(pending->line, t.column, "unknown point '" + t.text + "'");
      if (!p->point && i + 1 != pending->names.size()) {
        throw SceneParseError(pending->line, t.column,
                              "placeholder '" + t.text + "' must be the last center");
      }
      scene.porism.push_back(t.text);
    }
  }
  return scene;
}

SceneFile load_scene(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open scene file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scene(ss.str());
}

std::string serialize_scene(const SceneFile& scene) {
  std::ostringstream out;
  for (const auto& c : scene.conics) {
    const Mat3& m = c.conic.matrix();
    out << "conic " << c.name << " = " << m(0, 0) << ' ' << m(0, 1) << ' ' << m(0, 2) << ' '
        << m(1, 1) << ' ' << m(1, 2) << ' ' << m(2, 2) << '\n';
  }
  for (const auto& p : scene.points) {
    out << "point " << p.name << " = ";
    if (p.point) {
      const Vec3& v = p.point->coords();
      out << v[0] << ' ' << v[1] << ' ' << v[2];
    } else {
      out << '?';
    }
    if (p.role != Role::Given) out << ' ' << to_string(p.role);
    out << '\n';
  }
  for (const auto& l : scene.lines) {
    const Vec3& v = l.line.coords();
    out << "line " << l.name << " = " << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  }
  if (!scene.porism.empty()) {
    out << "porism";
    if (!scene.conics.empty() && scene.host != scene.conics.front().name) {
      out << " on " << scene.host;
    }
    out << " =";
    for (const auto& n : scene.porism) out << ' ' << n;
    out << '\n';
  }
  return out.str();
}

}  // namespace porism
