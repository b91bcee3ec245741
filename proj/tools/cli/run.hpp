#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "scenario.hpp"

namespace acd::cli {

enum ExitStatus : int {
  kExitOk = 0,
  kExitIoError = 1,
  kExitConfigError = 2,
  kExitPrecondition = 3,
  kExitVerificationFailed = 4,
};

struct Rendered {
  std::string body;
  std::optional<std::string> sidecar;  // nash trajectory CSV
  bool verification_failed = false;
};

/// Default format: csv for simulate, json otherwise.
Format default_format(Mode m);

/// Computes a mode's output without touching the file system. `sidecar_name`
/// is recorded in the nash report; pass an empty string to skip the sidecar.
/// Throws acd::Error from the solvers.
Rendered render(const ScenarioConfig& config, Format format, const std::string& sidecar_name);

/// "<dir>/<stem>.trajectory.csv" next to the given output path.
std::string sidecar_path(const std::string& out_path);

struct RunOptions {
  std::string config_path;
  std::optional<std::string> out;  // overrides output.path
  std::optional<Format> format;    // overrides output.format
};

/// Whole pipeline: read, parse, solve, write. Output goes to `out` when no
/// path is configured. Diagnostics go to `err`. Returns an ExitStatus.
int run(Mode subcommand, const RunOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace acd::cli
