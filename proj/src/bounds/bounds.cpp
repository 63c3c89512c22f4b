#include "dcq/bounds/bounds.hpp"

#include "dcq/dirac/brackets.hpp"
#include "dcq/quantum/operators.hpp"
#include "dcq/quantum/state.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace dcq::bounds {

namespace P = dcq::mech;

double robertson(Complex c) { return std::norm(c) / 4.0; }

double robertson(const Expr& commutator, const Binding& b) { return robertson(eval(commutator, b)); }

const quantum::CommutatorTable& commutators(int k) {
  static std::map<int, quantum::CommutatorTable> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it == cache.end()) {
    auto ds = dirac::DiracSystem::standard(k);
    it = cache.emplace(k, quantum::quantize(ds.table(ds.particle_vars()))).first;
  }
  return it->second;
}

namespace {

std::string chi_name(int j) { return "chi" + std::to_string(j); }

/// phi e^{i prod chi} e^{i sum chi} for k = 2, zeta (...) for k = 3.
Expr polar_state_expr(int k) {
  Expr prod(1), sum(0);
  for (int j = 1; j <= k; ++j) {
    prod = prod * sym(chi_name(j));
    sum = sum + sym(chi_name(j));
  }
  return sym("norm") * Expr::exp(Expr::imag() * (prod + sum));
}

}  // namespace

double lz_expectation(const ParamPoint& p, int j, int nodes) {
  int k = std::min(p.k, 3);
  if (k < 2) throw std::invalid_argument("polar state needs k >= 2");
  Expr psi = polar_state_expr(k);
  Expr dpsi = diff(psi, chi_name(j));
  double norm = k == 2 ? quantum::phi_norm(p.a()) : quantum::zeta_norm(p.a());
  Binding b{{"norm", norm}};
  for (int i = 1; i <= k; ++i) b[chi_name(i)] = p.chi(i);
  const double half = p.unit == AngleUnit::Degrees ? 180.0 : std::numbers::pi;
  quantum::OperatorForm lz = quantum::lz_operator();
  Binding op_params{{"alpha", p.alpha}};
  Complex num(0.0, 0.0);
  double den = 0;
  for (int q = 0; q < nodes; ++q) {
    double c = -half + 2 * half * (q + 0.5) / nodes;
    b[chi_name(j)] = c;
    Complex f = eval(psi, b), fp = eval(dpsi, b);
    num += std::conj(f) * quantum::apply(lz, op_params, c, f, fp);
    den += std::norm(f);
  }
  return (num / den).real();
}

Binding commutator_binding(const ParamPoint& p, const std::vector<double>& lz) {
  Binding b{{"a", p.a()}, {"e", p.e}};
  for (int j = 1; j <= p.k; ++j) {
    std::string s = std::to_string(j);
    double x = p.xj(j), y = p.yj(j), r2 = p.r2(j);
    double L = j - 1 < static_cast<int>(lz.size()) ? lz[static_cast<std::size_t>(j - 1)] : 0.0;
    b["x" + s] = x;
    b["y" + s] = y;
    b["Ax" + s] = p.A;
    b["Ay" + s] = p.A;
    b["Px" + s] = -y * L / r2;
    b["Py" + s] = x * L / r2;
  }
  return b;
}

Expr position_momentum_commutator(int k, int j, char axis, Convention c) {
  std::string s = std::to_string(j);
  std::string u = std::string(1, axis) + s, v = std::string("P") + axis + s;
  Expr entry = commutators(k).at(u, v);
  if (c == Convention::Full) return entry;
  // place particle j alone on radius sqrt(k) a: the squared coordinate becomes k a^2 minus the other one
  Expr own = sym(u), other = sym(std::string(1, axis == 'x' ? 'y' : 'x') + s);
  SideRelations rel;
  rel.add(pow(own, 2), Expr(k) * pow(P::PhaseSpace::a(), 2) - pow(other, 2));
  return reduce(entry, rel);
}

double position_momentum_bound(const ParamPoint& p, int j, char axis) {
  p.validate();
  if (axis != 'x' && axis != 'y') throw std::invalid_argument("axis must be x or y");
  return robertson(position_momentum_commutator(p.k, j, axis, p.convention), commutator_binding(p, {}));
}

const std::vector<BoundSpec>& bound_specs() {
  static const std::vector<BoundSpec> specs = {
      {"Px1-Py1", BoundForm::SameParticle, 2, 1, 1, "Px1", "Py1", 1.97e-3},
      {"Px2-Py2", BoundForm::SameParticle, 2, 2, 2, "Px2", "Py2", 6.5e-3},
      {"Px1-Py2", BoundForm::Lambda, 2, 1, 2, "Px1", "Py2", 3.11e-3},
      {"Px2-Py1", BoundForm::Lambda, 2, 2, 1, "Px2", "Py1", 2.217e-3},
      {"Px1-Px2", BoundForm::TableOnly, 2, 1, 2, "Px1", "Px2", 3.14e-4},
      {"Py1-Py2", BoundForm::TableOnly, 2, 1, 2, "Py1", "Py2", 2.91e-3},
      {"3:Px1-Py2", BoundForm::Pi, 3, 1, 2, "Px1", "Py2", 4.9e-4},
      {"3:Px2-Py1", BoundForm::Pi, 3, 2, 1, "Px2", "Py1", 9.86e-4},
      {"3:Px1-Px2", BoundForm::TableOnly, 3, 1, 2, "Px1", "Px2", 1.4e-4},
      {"3:Py1-Py2", BoundForm::TableOnly, 3, 1, 2, "Py1", "Py2", 1.29e-3},
      {"k3:Px1-Py1", BoundForm::K3, 3, 1, 1, "Px1", "Py1", std::nullopt},
      {"k3:Px2-Py2", BoundForm::K3, 3, 2, 2, "Px2", "Py2", std::nullopt},
  };
  return specs;
}

const BoundSpec& find_spec(const std::string& id) {
  for (const auto& s : bound_specs())
    if (s.id == id) return s;
  throw std::invalid_argument("unknown bound spec '" + id + "'");
}

namespace {

void check_arity(const BoundSpec& s, const ParamPoint& p) {
  p.validate();
  if (s.arity != p.k)
    throw std::invalid_argument("bound spec " + s.id + " needs k = " + std::to_string(s.arity) + ", point has k = " +
                                std::to_string(p.k));
}

}  // namespace

Complex bound_numerator(const BoundSpec& s, const ParamPoint& p) {
  check_arity(s, p);
  const int i = s.first, o = 3 - s.first;  // subsystem and its partner among particles 1, 2
  const double eA = p.e * p.A;
  const double xx = p.xj(1) * p.xj(2), yy = p.yj(1) * p.yj(2);
  switch (s.form) {
    case BoundForm::SameParticle:
      return -(1 - p.alpha) - p.chi(o) + eA * (p.xj(i) - p.yj(i));
    case BoundForm::Lambda:
      return (-2 + p.alpha) * (yy + xx) + yy * std::exp(-p.chi(o)) + xx * std::exp(-p.chi(i)) +
             eA * p.a2 * (p.xj(i) - p.yj(i));
    case BoundForm::Pi:
      return (-2 + p.alpha) * (yy + xx) + yy * std::exp(-p.chi(o) * p.chi(3)) + xx * std::exp(-p.chi(i) * p.chi(3)) +
             eA * p.a2 * (p.xj(i) - p.yj(i));
    case BoundForm::K3:
      return 2 + std::exp(-p.chi(o) * p.chi(3)) + eA * (p.xj(i) - p.yj(i));
    case BoundForm::TableOnly: break;
  }
  throw std::invalid_argument("bound spec " + s.id + " has no printed closed form");
}

double bound_denominator(const BoundSpec& s, const ParamPoint& p) {
  double twok = 2.0 * p.k;
  double an = s.form == BoundForm::Lambda || s.form == BoundForm::Pi ? std::pow(p.a2, 4) : p.a2 * p.a2;
  return twok * twok * an;
}

double table_bound(const BoundSpec& s, const ParamPoint& p) {
  check_arity(s, p);
  std::vector<double> lz;
  for (int j = 1; j <= p.k; ++j) lz.push_back(lz_expectation(p, j));
  return robertson(commutators(p.k).at(s.u, s.v), commutator_binding(p, lz));
}

double printed_bound(const BoundSpec& s, const ParamPoint& p) {
  if (s.form == BoundForm::TableOnly) return table_bound(s, p);
  return std::norm(bound_numerator(s, p)) / bound_denominator(s, p);
}

std::vector<double> calibrate_alpha(const BoundSpec& s, const ParamPoint& p, double target) {
  ParamPoint p0 = p, p1 = p;
  p0.alpha = 0;
  p1.alpha = 1;
  Complex n0 = bound_numerator(s, p0);
  Complex c = bound_numerator(s, p1) - n0;
  double qa = std::norm(c), qb = 2 * (n0 * std::conj(c)).real(), qc = std::norm(n0) - target * bound_denominator(s, p);
  if (qa == 0) return {};
  double disc = qb * qb - 4 * qa * qc;
  if (disc < 0) return {};
  double sq = std::sqrt(disc);
  if (sq == 0) return {-qb / (2 * qa)};
  return {(-qb - sq) / (2 * qa), (-qb + sq) / (2 * qa)};
}

double baseline_position_momentum() {
  ParamPoint p = ParamPoint::position_momentum(1);
  return position_momentum_bound(p, 1, 'x');
}

double baseline_momentum(int m) {
  ParamPoint p = ParamPoint::position_momentum(1);
  p.alpha = 0;
  return robertson(commutators(1).at("Px1", "Py1"), commutator_binding(p, {m - p.alpha}));
}

}  // namespace dcq::bounds
