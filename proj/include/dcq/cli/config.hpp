#pragma once

#include "dcq/bounds/point.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcq::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fully resolved run settings. Coordinates left unset fall back to the
/// command's own default point (see resolve_point).
struct RunConfig {
  std::string command;

  int k = 2;
  double a2 = 10;
  std::optional<std::vector<double>> x, y;
  double e = 1;
  double A = 0.5;
  double alpha = 0;
  bool alpha_set = false;
  std::string convention = "reduced";
  std::string unit = "radians";
  bool unit_set = false;

  std::string spec = "x1-Px1";
  std::string kind = "upper";
  bool calibrate = false;

  double grid_min = 0, grid_max = 40;
  int grid_points = 400;
  double resolution = 1e-3;

  int fourier_n = 16;
  int nodes = 512;

  double chi = 0, chi1 = 0.5, chi2 = 1.2;
  double V = 0;
  int particle = 1;

  std::string only;
  std::string format = "json";
  std::string out;
};

/// Keys accepted by the config file and as --key flags.
const std::vector<std::string>& config_keys();

/// Sets one key from its text form; unknown keys and malformed values throw ConfigError.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

/// Flat `key = value` lines; '#' starts a comment; blank lines ignored.
void load_config_file(RunConfig& cfg, const std::string& path);

/// Point used by bound/sweep/energy: explicit coordinates or the command default.
bounds::ParamPoint resolve_point(const RunConfig& cfg, const bounds::ParamPoint& fallback);

nlohmann::json to_json(const RunConfig& cfg);

}  // namespace dcq::cli
