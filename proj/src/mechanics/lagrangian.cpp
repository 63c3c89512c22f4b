#include "dcq/mechanics/lagrangian.hpp"

#include <algorithm>

namespace dcq::mech {

LagrangianModel build_lagrangian(int k, bool constrained) {
  PhaseSpace ps(k);
  using P = PhaseSpace;
  std::vector<Expr> terms;
  for (int j = 1; j <= k; ++j) {
    terms.push_back(num(1, 2) * (pow(P::vx(j), 2) + pow(P::vy(j), 2)));
    terms.push_back(-P::e() * P::V(j));
    terms.push_back(P::e() * (P::vx(j) * P::ax(j) + P::vy(j) * P::ay(j)));
    if (constrained) terms.push_back(-P::lam() * (P::r2(j) - pow(P::a(), 2)));
  }
  LagrangianModel m{ps, constrained, simplify(Expr::sum(terms)), {}};
  for (int j = 1; j <= k; ++j) {
    m.velocities.push_back(P::vx(j).name());
    m.velocities.push_back(P::vy(j).name());
  }
  if (constrained) m.velocities.push_back(P::vlam().name());
  return m;
}

LagrangianModel custom_lagrangian(const PhaseSpace& ps, const Expr& L, std::vector<std::string> velocities) {
  return LagrangianModel{ps, true, simplify(L), std::move(velocities)};
}

DegeneracyReport hessian_degeneracy(const LagrangianModel& L) {
  DegeneracyReport r;
  const auto& v = L.velocities;
  r.hessian = zero_matrix(v.size());
  std::vector<Expr> first;
  for (const auto& s : v) first.push_back(diff(L.L, s));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r.hessian[i][j] = diff(first[i], v[j]);
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool zero = std::all_of(r.hessian[i].begin(), r.hessian[i].end(), [](const Expr& e) { return e.is_zero(); });
    if (zero) r.null_directions.push_back(v[i]);
  }
  r.determinant = determinant(r.hessian);
  r.degenerate = r.determinant.is_zero();
  return r;
}

const char* variant_name(HamiltonianVariant v) {
  switch (v) {
    case HamiltonianVariant::Raw: return "H1";
    case HamiltonianVariant::Total: return "H2";
    case HamiltonianVariant::Reduced: return "H3";
  }
  return "?";
}

namespace {

std::string momentum_for(const std::string& velocity) {
  if (velocity == "vlam") return "Plam";
  return "P" + velocity.substr(1);
}

}  // namespace

HamiltonianModel legendre(const LagrangianModel& L) {
  DegeneracyReport deg = hessian_degeneracy(L);
  std::vector<std::string> active;
  for (const auto& v : L.velocities) {
    bool null = std::find(deg.null_directions.begin(), deg.null_directions.end(), v) != deg.null_directions.end();
    if (null && v != "vlam") throw UnsupportedDegeneracy("Lagrangian is degenerate in non-multiplier direction " + v);
    if (!null) active.push_back(v);
  }
  // p = M v + b with M the active Hessian block (constant for these models).
  const std::size_t n = active.size();
  Matrix M = zero_matrix(n);
  std::map<std::string, Expr> at_zero;
  for (const auto& v : L.velocities) at_zero[v] = Expr(0);
  Matrix rhs(n, std::vector<Expr>(1));
  for (std::size_t i = 0; i < n; ++i) {
    Expr p = diff(L.L, active[i]);
    for (std::size_t j = 0; j < n; ++j) {
      M[i][j] = diff(p, active[j]);
      if (!free_symbols(M[i][j]).empty() &&
          std::any_of(L.velocities.begin(), L.velocities.end(), [&](const std::string& s) { return depends_on(M[i][j], s); }))
        throw UnsupportedDegeneracy("velocity-dependent kinetic metric is not supported");
    }
    rhs[i][0] = sym(momentum_for(active[i])) - subst(p, at_zero);
  }
  Matrix sol = multiply(inverse(M), rhs);
  std::map<std::string, Expr> vel;
  std::vector<Expr> pv;
  for (std::size_t i = 0; i < n; ++i) {
    vel[active[i]] = sol[i][0];
    pv.push_back(sym(momentum_for(active[i])) * sol[i][0]);
  }
  Expr H = Expr::sum(pv) - subst(L.L, vel);
  if (std::find(L.velocities.begin(), L.velocities.end(), "vlam") != L.velocities.end())
    H = H + PhaseSpace::plam() * PhaseSpace::vlam();
  return HamiltonianModel{L.ps, HamiltonianVariant::Raw, simplify(H)};
}

HamiltonianModel total_hamiltonian(const HamiltonianModel& h1) {
  return HamiltonianModel{h1.ps, HamiltonianVariant::Total, subst(h1.H, {{"vlam", PhaseSpace::u1()}})};
}

HamiltonianModel reduced_hamiltonian(const HamiltonianModel& h) {
  Expr H = subst(h.H, {{"Plam", Expr(0)}});
  return HamiltonianModel{h.ps, HamiltonianVariant::Reduced, reduce(H, h.ps.surface())};
}

}  // namespace dcq::mech
