#include "dcq/bounds/sweep.hpp"

#include <cmath>
#include <sstream>

namespace dcq::bounds {

const char* threshold_kind_name(ThresholdKind k) { return k == ThresholdKind::Upper ? "upper" : "cutoff"; }

ThresholdKind parse_threshold_kind(const std::string& s) {
  if (s == "upper") return ThresholdKind::Upper;
  if (s == "cutoff") return ThresholdKind::Cutoff;
  throw std::invalid_argument("unknown threshold kind '" + s + "'");
}

ThresholdLaw law_for(ThresholdKind kind) {
  return kind == ThresholdKind::Upper ? ThresholdLaw{1.63, 1.22} : ThresholdLaw{17.8, 6.7};
}

double threshold_law(ThresholdKind kind, int k) {
  if (k < 2) throw std::invalid_argument("threshold law needs k >= 2");
  ThresholdLaw l = law_for(kind);
  return l.intercept + (k - 2) * l.slope;
}

int sweep_subsystem(ThresholdKind kind) { return kind == ThresholdKind::Upper ? 2 : 1; }

const BoundSpec& sweep_spec(ThresholdKind kind, int k) {
  int j = sweep_subsystem(kind);
  std::string pair = "Px" + std::to_string(j) + "-Py" + std::to_string(j);
  if (k == 2) return find_spec(pair);
  if (k == 3) return find_spec("k3:" + pair);
  throw std::invalid_argument("threshold sweeps are defined for k = 2 and k = 3");
}

namespace {

ParamPoint point_for(int k, const ParamPoint& base) {
  ParamPoint p = k == 3 ? ParamPoint::tripartite() : ParamPoint::bipartite();
  if (static_cast<int>(base.x.size()) >= k) {
    p.x = base.x;
    p.y = base.y;
    p.x.resize(static_cast<std::size_t>(k));
    p.y.resize(static_cast<std::size_t>(k));
  }
  p.k = k;
  p.a2 = base.a2;
  p.e = base.e;
  p.alpha = base.alpha;
  p.unit = base.unit;
  p.convention = base.convention;
  return p;
}

double bound_at(const BoundSpec& s, ParamPoint p, double A) {
  p.A = A;
  return printed_bound(s, p);
}

}  // namespace

Calibration calibrate_threshold(ThresholdKind kind, const ParamPoint& base, double baseline) {
  ParamPoint p = point_for(2, base);
  p.A = threshold_law(kind, 2);
  const BoundSpec& s = sweep_spec(kind, 2);
  // numerator is linear in A; the bound rises through the baseline where the numerator
  // has the sign of its A-slope
  ParamPoint q = p;
  q.A += 1;
  double slope = (bound_numerator(s, q) - bound_numerator(s, p)).real();
  double target = std::sqrt(baseline * bound_denominator(s, p)) * (slope >= 0 ? 1 : -1);
  ParamPoint z = p;
  z.alpha = 0;
  double n0 = bound_numerator(s, z).real();
  Calibration c;
  c.alpha = target - n0;  // the numerator carries +alpha
  c.unit = p.unit;
  std::ostringstream os;
  os << "alpha fixed so the k=2 " << threshold_kind_name(kind) << " crossing sits at A=" << p.A << " (subsystem "
     << sweep_subsystem(kind) << ", angles in " << angle_unit_name(p.unit) << ")";
  c.note = os.str();
  return c;
}

SweepResult sweep_threshold(ThresholdKind kind, int k, const ParamPoint& point, double baseline,
                            const SweepOptions& opt) {
  if (opt.points < 2 || !(opt.a_max > opt.a_min)) throw std::invalid_argument("sweep grid needs a_max > a_min and >= 2 points");
  SweepResult r;
  r.kind = kind;
  r.k = k;
  r.subsystem = sweep_subsystem(kind);
  r.baseline = baseline;
  const BoundSpec& s = sweep_spec(kind, k);
  r.spec = s.id;
  ParamPoint p = point_for(k, point);
  r.calibration.alpha = p.alpha;
  r.calibration.unit = p.unit;
  r.law = threshold_law(kind, k);
  const double a = p.a();

  for (int i = 0; i < opt.points; ++i) {
    double A = opt.a_min + (opt.a_max - opt.a_min) * i / (opt.points - 1);
    double v = bound_at(s, p, A);
    r.grid.push_back({A, field_from_potential(A, a), v, v >= baseline});
  }
  std::size_t hit = r.grid.size();
  for (std::size_t i = 1; i < r.grid.size(); ++i)
    if (!r.grid[i - 1].above && r.grid[i].above) {
      hit = i;
      break;
    }
  if (hit == r.grid.size()) {
    std::ostringstream os;
    os << "no upward crossing of the baseline " << baseline << " for A in [" << opt.a_min << ", " << opt.a_max
       << "]: bound(" << opt.a_min << ") = " << r.grid.front().bound << ", bound(" << opt.a_max
       << ") = " << r.grid.back().bound;
    throw NoCrossing(os.str(), r.grid.front().bound, r.grid.back().bound);
  }
  double lo = r.grid[hit - 1].A, hi = r.grid[hit].A;
  while (hi - lo > opt.resolution) {
    double mid = 0.5 * (lo + hi);
    (bound_at(s, p, mid) >= baseline ? hi : lo) = mid;
  }
  r.a_star = 0.5 * (lo + hi);
  r.b_star = field_from_potential(r.a_star, a);
  r.deviation = std::abs(r.a_star - r.law);
  for (std::size_t i = hit + 1; i < r.grid.size(); ++i)
    if (r.grid[i].bound < r.grid[i - 1].bound) {
      r.monotone_above = false;
      r.nonmonotone_at.push_back(r.grid[i].A);
    }
  return r;
}

AngleUnit select_angle_unit(ThresholdKind kind, double baseline, const SweepOptions& opt) {
  double best = INFINITY;
  AngleUnit pick = AngleUnit::Radians;
  for (AngleUnit u : {AngleUnit::Radians, AngleUnit::Degrees}) {
    ParamPoint p = ParamPoint::tripartite();
    p.unit = u;
    p.alpha = calibrate_threshold(kind, p, baseline).alpha;
    try {
      double dev = sweep_threshold(kind, 3, p, baseline, opt).deviation;
      if (dev < best) {
        best = dev;
        pick = u;
      }
    } catch (const NoCrossing&) {
    }
  }
  return pick;
}

}  // namespace dcq::bounds
