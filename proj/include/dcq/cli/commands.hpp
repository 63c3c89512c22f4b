#pragma once

#include "dcq/cli/config.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace dcq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedRows = 1;
inline constexpr int kExitDomain = 2;    // chain failure, unbound symbol, no crossing
inline constexpr int kExitSingular = 3;  // Phi not invertible on the surface
inline constexpr int kExitUsage = 64;

/// A finished command. `report` always carries "command", "config" and "result";
/// run-dependent values (timings) live under "metadata".
struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::json report;
  std::string text;
  std::string csv;  // empty when the command has no tabular output
  std::string diagnostics;
};

CommandResult cmd_derive(const RunConfig& cfg);
CommandResult cmd_bound(const RunConfig& cfg);
CommandResult cmd_sweep(const RunConfig& cfg);
CommandResult cmd_energy(const RunConfig& cfg);
CommandResult cmd_reproduce(const RunConfig& cfg);

/// Dispatches on cfg.command, mapping library exceptions to exit codes.
CommandResult run_command(const RunConfig& cfg);

/// Report in cfg.format; csv falls back to json when the command has none.
std::string render(const CommandResult& r, const std::string& format);

/// Writes through a sibling temp file and renames it into place.
void write_atomic(const std::string& path, const std::string& content);

/// Full command line entry point.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace dcq::cli
