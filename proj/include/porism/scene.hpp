#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "porism/porism.hpp"

namespace porism {

enum class Role { Given, CompleteMe, Seed };

std::string_view to_string(Role r);

struct NamedConic {
  std::string name;
  Conic conic;
};

struct NamedPoint {
  std::string name;
  std::optional<HomPoint> point;  // empty only for a complete-me placeholder
  Role role = Role::Given;
};

struct NamedLine {
  std::string name;
  HomLine line;
};

/// In-memory form of a scene file.
///
/// Grammar, one statement per line, '#' starts a comment:
///
///   conic NAME = a11 a12 a13 a22 a23 a33
///   point NAME = x1 x2 x3 [given|complete-me|seed]
///   point NAME = ? complete-me
///   line  NAME = l1 l2 l3
///   porism [on CONIC] = NAME NAME ...
///
/// Numbers are exact rationals written "p", "p/q" or as finite decimals.
/// The first conic is the porism host unless `porism on NAME` picks another.
struct SceneFile {
  std::vector<NamedConic> conics;
  std::vector<NamedPoint> points;
  std::vector<NamedLine> lines;
  std::vector<std::string> porism;
  std::string host;

  const Conic& host_conic() const;
  const NamedPoint* find_point(std::string_view name) const;
  const NamedLine* find_line(std::string_view name) const;

  /// Porism entries that have coordinates, in order.
  std::vector<HomPoint> centers() const;
  std::vector<std::string> center_names() const;
  std::vector<HomPoint> seeds() const;
  /// Name of the complete-me placeholder at the end of the porism list, if any.
  std::optional<std::string> placeholder() const;

  /// Throws CenterOnConic naming the offending point.
  PorismScene to_scene() const;
};

class SceneParseError : public std::runtime_error {
 public:
  SceneParseError(std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

SceneFile parse_scene(std::string_view text);
SceneFile load_scene(const std::string& path);
std::string serialize_scene(const SceneFile& scene);

}  // namespace porism
