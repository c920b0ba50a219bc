#pragma once

// Subcommands of the `stacky` tool. Each returns a JSON output document and
// an exit code; rendering is separate so that tests can compare bytes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "stacky/cli/document.hpp"

namespace stacky::cli {

using Output = nlohmann::ordered_json;

enum ExitCode : int { Success = 0, VerificationFailed = 1, InputError = 2 };

struct Options {
  /// Overrides the document's characteristic.
  std::optional<std::size_t> characteristic;
  bool chars = false;
  std::string check = "all";
  /// Runs the seeded random suite in `verify`.
  std::optional<std::uint64_t> seed;
  std::size_t suite_count = 120;
  bool parallel = false;
};

struct CommandResult {
  Output output;
  int exit_code = Success;
};

CommandResult cmd_group_info(const InputDocument& d, const Options& o);
CommandResult cmd_motive_bh(const InputDocument& d, const Options& o);
CommandResult cmd_motive_quotient(const InputDocument& d, const Options& o);
CommandResult cmd_motive_gerbe(const InputDocument& d, const Options& o);
CommandResult cmd_motive_curve(const CurveSpec& c, const Options& o);
/// `d` may be absent when only the seeded suite is requested.
CommandResult cmd_verify(const std::optional<InputDocument>& d, const Options& o);

/// Two-space indented JSON with a trailing newline.
std::string render_json(const Output& out);
std::string render_text(const Output& out);

}  // namespace stacky::cli
