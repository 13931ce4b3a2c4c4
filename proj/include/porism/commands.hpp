#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "porism/render.hpp"
#include "porism/scene.hpp"

namespace porism {

/// Process exit codes of the command-line front end.
enum ExitCode : int { kSuccess = 0, kNotClosing = 1, kInputError = 2, kInternalError = 3 };

struct CommandResult {
  int exit_code = kSuccess;
  std::string report;
  /// Amended scene text (complete) or SVG document (render).
  std::optional<std::string> document;
};

/// Exact verdict, composite matrix, and the butterfly cross-ratios when
/// four centers lie on a line meeting the conic rationally.
CommandResult cmd_verify(const SceneFile& scene);

struct CompleteRequest {
  /// P_{n-1} given explicitly; otherwise the last given porism center.
  std::optional<HomPoint> next;
  std::string next_name;
  /// Name for P_n when the scene has no complete-me placeholder.
  std::string last_name = "Pn";
};

/// Locates the closing line by the ruler construction, checks that P_{n-1}
/// is on it and appends the unique closing P_n to the scene.
CommandResult cmd_complete(const SceneFile& scene, const CompleteRequest& request = {});

/// `count` traces starting at rational_point(host, base, start + k).
CommandResult cmd_trace(const SceneFile& scene, const Scalar& start, std::size_t count);

CommandResult cmd_render(const SceneFile& scene, const RenderSpec& spec, const Scalar& start,
                         std::size_t traces);

CommandResult cmd_selftest(std::size_t cases, std::uint64_t seed, const std::string& filter = {});

/// Pappus, Pascal and Scissors regenerations on fixed rational configurations.
CommandResult cmd_classic();

/// Message surfaced when the given prefix already closes.
extern const char* const kAlreadyClosingExplanation;

}  // namespace porism
