#pragma once

#include "dcq/bounds/bounds.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dcq::bounds {

enum class ThresholdKind { Upper, Cutoff };
const char* threshold_kind_name(ThresholdKind k);
ThresholdKind parse_threshold_kind(const std::string& s);

/// A(k) = intercept + (k - 2) slope.
struct ThresholdLaw {
  double intercept, slope;
};

ThresholdLaw law_for(ThresholdKind kind);
double threshold_law(ThresholdKind kind, int k);

struct SweepOptions {
  double a_min = 0;
  double a_max = 40;
  int points = 400;
  double resolution = 1e-3;
};

/// Upper thresholds track subsystem 2, cutoffs subsystem 1.
int sweep_subsystem(ThresholdKind kind);

/// The bound spec swept for (kind, k): the same-particle k = 2 formula or the k = 3 forms.
const BoundSpec& sweep_spec(ThresholdKind kind, int k);

struct Calibration {
  double alpha = 0;
  AngleUnit unit = AngleUnit::Radians;
  std::string note;
};

/// alpha placing the k = 2 crossing of `kind` at the law intercept (bound rising through the baseline).
Calibration calibrate_threshold(ThresholdKind kind, const ParamPoint& base, double baseline);

struct SweepSample {
  double A, B, bound;
  bool above;
};

struct SweepResult {
  ThresholdKind kind = ThresholdKind::Upper;
  int k = 2;
  int subsystem = 2;
  std::string spec;
  double baseline = 0;
  Calibration calibration;
  std::vector<SweepSample> grid;
  double a_star = 0, b_star = 0;
  double law = 0;
  double deviation = 0;
  /// Bound nondecreasing on the grid above the crossing; offending A values listed otherwise.
  bool monotone_above = true;
  std::vector<double> nonmonotone_at;
};

class NoCrossing : public std::runtime_error {
 public:
  NoCrossing(const std::string& what, double lo_value, double hi_value)
      : std::runtime_error(what), lo_value(lo_value), hi_value(hi_value) {}
  double lo_value, hi_value;
};

/// Scans A over the grid, brackets the first point where the bound rises through
/// `baseline` and bisects to `resolution`. `point` supplies coordinates, unit and alpha.
SweepResult sweep_threshold(ThresholdKind kind, int k, const ParamPoint& point, double baseline,
                            const SweepOptions& opt = {});

/// Runs the k = 3 sweep under both angle units (alpha calibrated from k = 2 in each)
/// and returns the unit with the smaller deviation from the law.
AngleUnit select_angle_unit(ThresholdKind kind, double baseline, const SweepOptions& opt = {});

}  // namespace dcq::bounds
