#pragma once

#include "dcq/mechanics/phase_space.hpp"
#include "dcq/symexpr/matrix.hpp"

#include <string>
#include <vector>

namespace dcq::mech {

struct LagrangianModel {
  PhaseSpace ps;
  bool constrained = true;
  Expr L;
  std::vector<std::string> velocities;  // vx1, vy1, ..., vlam
};

LagrangianModel build_lagrangian(int k, bool constrained);
/// Wrap an arbitrary Lagrangian over the given velocities.
LagrangianModel custom_lagrangian(const PhaseSpace& ps, const Expr& L, std::vector<std::string> velocities);

struct DegeneracyReport {
  bool degenerate = false;
  std::vector<std::string> null_directions;
  Expr determinant;
  Matrix hessian;
};

DegeneracyReport hessian_degeneracy(const LagrangianModel& L);

enum class HamiltonianVariant { Raw, Total, Reduced };
const char* variant_name(HamiltonianVariant v);

struct HamiltonianModel {
  PhaseSpace ps;
  HamiltonianVariant variant = HamiltonianVariant::Raw;
  Expr H;
};

class UnsupportedDegeneracy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// H1 = sum P v - L with velocities eliminated; the multiplier velocity stays
/// as Plam * vlam.
HamiltonianModel legendre(const LagrangianModel& L);
/// H2: vlam renamed to the multiplier u1.
HamiltonianModel total_hamiltonian(const HamiltonianModel& h1);
/// H3: Plam -> 0 and the summed surface relation applied.
HamiltonianModel reduced_hamiltonian(const HamiltonianModel& h);

}  // namespace dcq::mech
