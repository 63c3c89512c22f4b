#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace dcq::cli {

struct GoldenRow {
  std::string id;
  std::string group;
  int criterion = 0;  // 0 for informational rows
  std::string expected;
  std::string computed;
  std::string tolerance;
  bool pass = false;
  bool gating = true;
  std::string note;
};

struct ReproduceOptions {
  /// Restrict to one group: brackets, delta, constraints, jacobi, bounds, fields,
  /// thresholds, ansatz, hermiticity, energy, oracle, printed-bounds, states.
  std::string only;
  int fourier_n = 16;
  int nodes = 512;
};

struct ReproduceReport {
  std::vector<GoldenRow> rows;
  nlohmann::json calibration;
  /// Wall-clock seconds per group; kept out of the deterministic body.
  nlohmann::json timings;
  bool all_pass = true;
};

const std::vector<std::string>& reproduce_groups();

ReproduceReport reproduce(const ReproduceOptions& opt = {});

/// True if `computed`, rounded half-up to the decimals printed in `printed`, equals it.
bool rounds_to(double computed, const std::string& printed);

nlohmann::json to_json(const ReproduceReport& r);
std::string to_text(const ReproduceReport& r);
std::string to_csv(const ReproduceReport& r);

}  // namespace dcq::cli
