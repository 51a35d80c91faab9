#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nuframe/framekit.hpp"
#include "nuframe/periodic.hpp"

namespace nuframe::app {

inline constexpr const char* kReportVersion = "1";

enum ExitCode : int { kPass = 0, kVerifiedFalse = 1, kConfigError = 2, kDataError = 3 };

struct Tolerances {
  double gram = kGramTolerance;
  double identity = kIdentityTolerance;
  double tail = 1e-12;
};

struct RunConfig {
  std::filesystem::path source;  // the INI file itself
  FieldConfig field;
  int N = 1;
  int r = 1;
  std::optional<std::uint32_t> dilation_unit;
  Normalization normalization = Normalization::unitary;
  std::filesystem::path masks;  // resolved against the config directory
  int j0 = 0;
  int j1 = 4;
  int j_max = 4;
  std::uint64_t seed = 1;
  int count = 100;
  int resolution = 4;
  int cascade_iterations = 8;
  double epsilon = 0.01;
  Tolerances tol;
};

/// Parses an INI file. Throws ConfigError.
RunConfig load_run_config(const std::filesystem::path& path);

/// Field + system + masks, validated against each other. Throws ConfigError / DataError.
SystemConfig build_system(const RunConfig& cfg);

struct CommandResult {
  int exit_code = kPass;
  std::string json;  // empty for commands without a report
};

CommandResult cmd_field_info(const RunConfig& cfg, std::ostream& text);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_periodic(const RunConfig& cfg);

/// Full command-line entry point; never throws. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nuframe::app
