#pragma once

#include "dcq/bounds/point.hpp"
#include "dcq/quantum/commutators.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dcq::bounds {

/// |c|^2 / 4.
double robertson(Complex commutator_value);
double robertson(const Expr& commutator, const Binding& b);

/// Quantized Dirac table for k particles, built once per k.
const quantum::CommutatorTable& commutators(int k);

/// <Psi| L_z^(j) |Psi> / <Psi|Psi> on the polar state with the other angles
/// held at the point's values, by midpoint quadrature over chi_j.
double lz_expectation(const ParamPoint& p, int j, int nodes = 2048);

/// Symbol binding for commutator entries: positions, a, e, Ax_j = Ay_j = A and
/// canonical momenta P_j = L_j (-y_j, x_j) / r_j^2 carrying the given L_z values.
Binding commutator_binding(const ParamPoint& p, const std::vector<double>& lz);

/// [x_j, Px_j] (axis 'x') or [y_j, Py_j] (axis 'y') under the point's convention.
double position_momentum_bound(const ParamPoint& p, int j, char axis);
Expr position_momentum_commutator(int k, int j, char axis, Convention c);

enum class BoundForm {
  SameParticle,  // |-(1-alpha) - chi_other + eA(x - y)|^2 / ((2k)^2 a^4)
  Lambda,        // |Lambda + e a^2 A (x - y)|^2 / ((2k)^2 a^8)
  Pi,            // tripartite Lambda with e^{-chi chi3}
  K3,            // |2 + e^{-chi chi3} + eA(x - y)|^2 / ((2k)^2 a^4)
  TableOnly      // no printed closed form; evaluated from the quantized table
};

struct BoundSpec {
  std::string id;
  BoundForm form;
  int arity;            // 2 or 3 particles
  int first, second;    // particle indices of the momentum pair (P_x first, P_y or P_x second)
  std::string u, v;     // commutator operands
  std::optional<double> printed;
};

const std::vector<BoundSpec>& bound_specs();
const BoundSpec& find_spec(const std::string& id);

/// Numerator (inside |.|) and denominator of a printed formula; TableOnly specs throw.
Complex bound_numerator(const BoundSpec& s, const ParamPoint& p);
double bound_denominator(const BoundSpec& s, const ParamPoint& p);
/// Printed formula value, or the table route for TableOnly specs.
double printed_bound(const BoundSpec& s, const ParamPoint& p);
/// Robertson value of the quantized table entry with L_z from the quadrature oracle.
double table_bound(const BoundSpec& s, const ParamPoint& p);

/// Real alpha values for which printed_bound(s, p) equals `target` (0, 1 or 2 roots).
std::vector<double> calibrate_alpha(const BoundSpec& s, const ParamPoint& p, double target);

/// Single-particle baselines from the k = 1 table at a^2 = 10, x = 1, y = 3.
double baseline_position_momentum();
/// [Px, Py] with L_z eigenvalue m - alpha (alpha = 0, A = 0).
double baseline_momentum(int m = 3);

}  // namespace dcq::bounds
