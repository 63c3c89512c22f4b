#pragma once

#include <string>
#include <vector>

namespace dcq::bounds {

/// Position-momentum commutators either straight from the table (full,
/// 1 - x^2/(k a^2)) or with the particle placed on radius sqrt(k) a (reduced, y^2/(k a^2)).
enum class Convention { Reduced, Full };
enum class AngleUnit { Radians, Degrees };

const char* convention_name(Convention c);
const char* angle_unit_name(AngleUnit u);
Convention parse_convention(const std::string& s);
AngleUnit parse_angle_unit(const std::string& s);

struct ParamPoint {
  int k = 2;
  std::vector<double> x, y;  // 0-based storage, particle j is x[j-1]
  double a2 = 10;
  double e = 1;
  double A = 0.5;
  double alpha = 0;
  Convention convention = Convention::Reduced;
  AngleUnit unit = AngleUnit::Radians;

  double a() const;
  double xj(int j) const { return x.at(static_cast<std::size_t>(j - 1)); }
  double yj(int j) const { return y.at(static_cast<std::size_t>(j - 1)); }
  /// atan2(y_j, x_j) in (-pi, pi], expressed in `unit`.
  double chi(int j) const;
  double r2(int j) const { return xj(j) * xj(j) + yj(j) * yj(j); }
  /// Largest |x_j^2 + y_j^2 - a^2| (reported, not enforced: the printed points sit slightly off the circle).
  double radius_defect() const;
  void validate() const;

  /// a^2 = 10, x = (2, 3.1), y = (2.45, 0.65), e = 1, A = 0.5.
  static ParamPoint bipartite();
  /// Adds x3 = 2.6, y3 = 1.8.
  static ParamPoint tripartite();
  /// Single-particle position-momentum point: x1 = 1, y1 = 3.
  static ParamPoint position_momentum(int k);
};

/// B = 2A/a.
double field_from_potential(double A, double a);

struct ShiftedPoint {
  double x, y, r2;
};

/// (x + n, y + n) and the implied squared radius.
ShiftedPoint shifted_point(double x, double y, int n);

}  // namespace dcq::bounds
