#include "dcq/bounds/point.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dcq::bounds {

const char* convention_name(Convention c) { return c == Convention::Reduced ? "reduced" : "full"; }
const char* angle_unit_name(AngleUnit u) { return u == AngleUnit::Radians ? "radians" : "degrees"; }

Convention parse_convention(const std::string& s) {
  if (s == "reduced") return Convention::Reduced;
  if (s == "full") return Convention::Full;
  throw std::invalid_argument("unknown convention '" + s + "'");
}

AngleUnit parse_angle_unit(const std::string& s) {
  if (s == "radians" || s == "rad") return AngleUnit::Radians;
  if (s == "degrees" || s == "deg") return AngleUnit::Degrees;
  throw std::invalid_argument("unknown angle unit '" + s + "'");
}

double ParamPoint::a() const { return std::sqrt(a2); }

double ParamPoint::chi(int j) const {
  double c = std::atan2(yj(j), xj(j));
  return unit == AngleUnit::Degrees ? c * 180.0 / std::numbers::pi : c;
}

double ParamPoint::radius_defect() const {
  double worst = 0;
  for (int j = 1; j <= static_cast<int>(x.size()); ++j) worst = std::max(worst, std::abs(r2(j) - a2));
  return worst;
}

void ParamPoint::validate() const {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(a2 > 0)) throw std::invalid_argument("a^2 must be positive");
  if (x.size() != y.size() || static_cast<int>(x.size()) < std::min(k, 3))
    throw std::invalid_argument("point needs coordinates for every particle");
}

ParamPoint ParamPoint::bipartite() {
  ParamPoint p;
  p.k = 2;
  p.x = {2, 3.1};
  p.y = {2.45, 0.65};
  return p;
}

ParamPoint ParamPoint::tripartite() {
  ParamPoint p = bipartite();
  p.k = 3;
  p.x.push_back(2.6);
  p.y.push_back(1.8);
  return p;
}

ParamPoint ParamPoint::position_momentum(int k) {
  ParamPoint p;
  p.k = k;
  p.x.assign(static_cast<std::size_t>(k), 1.0);
  p.y.assign(static_cast<std::size_t>(k), 3.0);
  p.A = 0;
  return p;
}

double field_from_potential(double A, double a) {
  if (!(a > 0)) throw std::invalid_argument("radius must be positive");
  return 2 * A / a;
}

ShiftedPoint shifted_point(double x, double y, int n) {
  double xs = x + n, ys = y + n;
  return {xs, ys, xs * xs + ys * ys};
}

}  // namespace dcq::bounds
