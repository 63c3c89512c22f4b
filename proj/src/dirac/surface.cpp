#include "dcq/dirac/surface.hpp"

#include <cmath>
#include <functional>

namespace dcq::dirac {

using mech::PhaseSpace;

std::vector<std::string> potential_keys(int k, int max_order) {
  std::vector<std::string> keys;
  for (int j = 1; j <= k; ++j) {
    std::string xs = "x" + std::to_string(j), ys = "y" + std::to_string(j);
    std::function<void(std::vector<std::string>, int)> rec = [&](std::vector<std::string> orders, int nx) {
      keys.push_back(PhaseSpace::V(j, orders).deriv_key());
      if (static_cast<int>(orders.size()) == max_order) return;
      // orders are kept sorted (x before y) so each multiset appears once
      if (nx == static_cast<int>(orders.size())) {
        auto o = orders;
        o.push_back(xs);
        rec(o, nx + 1);
      }
      auto o = orders;
      o.push_back(ys);
      rec(o, nx);
    };
    rec({}, 0);
  }
  return keys;
}

SurfaceSampler::SurfaceSampler(const ConstraintChain& chain, unsigned long long seed) : chain_(&chain), rng_(seed) {}

Binding SurfaceSampler::sample() {
  const int k = chain_->ps.k;
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  Binding b;
  double a = 1.0 + 0.5 * (u(rng_) + 1.0);
  b["a"] = a;
  b["e"] = 0.5 + 0.5 * (u(rng_) + 1.0);
  b["A"] = u(rng_);
  for (const auto& key : potential_keys(k, 4)) b[key] = u(rng_);
  double R = 0.0;
  for (int j = 1; j <= k; ++j) {
    double th = ang(rng_);
    b[PhaseSpace::x(j).name()] = a * std::cos(th);
    b[PhaseSpace::y(j).name()] = a * std::sin(th);
    b[PhaseSpace::ax(j).name()] = u(rng_);
    b[PhaseSpace::ay(j).name()] = u(rng_);
    b[PhaseSpace::px(j).name()] = 2.0 * u(rng_);
    b[PhaseSpace::py(j).name()] = 2.0 * u(rng_);
    R += a * a;
  }
  b["Plam"] = 0.0;
  b["lam"] = 0.0;
  b["u1"] = 0.0;
  // Project momenta along r so that sum r.(P - eA) = 0.
  if (chain_->constraints.size() > 2) {
    Complex s3 = eval(chain_->constraints[2].expr, b);
    double t = s3.real() / R;
    for (int j = 1; j <= k; ++j) {
      b[PhaseSpace::px(j).name()] -= t * b[PhaseSpace::x(j).name()];
      b[PhaseSpace::py(j).name()] -= t * b[PhaseSpace::y(j).name()];
    }
  }
  // The last constraint is affine in lam.
  if (chain_->constraints.size() > 3) {
    const Expr& s4 = chain_->constraints[3].expr;
    b["lam"] = 0.0;
    Complex c0 = eval(s4, b);
    b["lam"] = 1.0;
    Complex c1 = eval(s4, b);
    b["lam"] = -c0 / (c1 - c0);
  }
  return b;
}

double SurfaceSampler::residual(const Binding& b) const {
  double r = 0.0;
  for (const auto& c : chain_->constraints) r = std::max(r, std::abs(eval(c.expr, b)));
  return r;
}

}  // namespace dcq::dirac
