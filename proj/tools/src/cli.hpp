#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "gj2d/error.hpp"

namespace gj2d::cli {

enum class Command { CheckMinimal, CheckDiag, Emax, Decide, Perturb, Plot, SystemDump };
enum class Format { Json, Svg, Dot };

std::optional<Command> command_from_string(std::string_view name);
std::optional<Format> format_from_string(std::string_view name);

struct RunConfig {
  Command command = Command::CheckMinimal;
  std::filesystem::path input;
  int m = 3;
  /// Grid resolution for check-minimal and system-dump; defaults to q and mq.
  std::optional<int> n;
  bool include_symmetry_faces = true;
  std::size_t max_violations = 10;
  std::optional<std::filesystem::path> output;
  Format format = Format::Json;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kNegative = 2;
inline constexpr int kPrecondition = 3;
inline constexpr int kIo = 4;
}  // namespace exit_code

int exit_code_for(ErrorKind kind);

/// Runs one command. The main artifact goes to config.output or `out`;
/// diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gj2d::cli
