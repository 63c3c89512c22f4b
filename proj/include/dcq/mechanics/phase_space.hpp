#pragma once

#include "dcq/symexpr/expr.hpp"

#include <string>
#include <vector>

namespace dcq::mech {

/// Extended phase space for k charged particles in the plane plus the
/// multiplier pair (lam, Plam). Symbol names: x1, y1, Px1, Py1, ..., lam, Plam.
/// Parameters: a (radius), e (charge), A (potential magnitude), Ax_j/Ay_j
/// (position-independent components) and V_j = V(x_j, y_j).
struct PhaseSpace {
  int k = 2;

  explicit PhaseSpace(int k_ = 2);

  std::vector<std::string> coordinates() const;  // x1, y1, ..., lam
  std::vector<std::string> momenta() const;      // Px1, Py1, ..., Plam
  std::vector<std::string> canonical() const;    // coordinates then momenta
  std::vector<std::string> parameters() const;   // a, e, A, Ax_j, Ay_j
  bool is_canonical(const std::string& name) const;

  static Expr x(int j) { return sym("x" + std::to_string(j)); }
  static Expr y(int j) { return sym("y" + std::to_string(j)); }
  static Expr px(int j) { return sym("Px" + std::to_string(j)); }
  static Expr py(int j) { return sym("Py" + std::to_string(j)); }
  static Expr ax(int j) { return sym("Ax" + std::to_string(j)); }
  static Expr ay(int j) { return sym("Ay" + std::to_string(j)); }
  static Expr vx(int j) { return sym("vx" + std::to_string(j)); }
  static Expr vy(int j) { return sym("vy" + std::to_string(j)); }
  static Expr lam() { return sym("lam"); }
  static Expr plam() { return sym("Plam"); }
  static Expr vlam() { return sym("vlam"); }
  static Expr u1() { return sym("u1"); }
  static Expr a() { return sym("a"); }
  static Expr e() { return sym("e"); }
  static Expr A() { return sym("A"); }

  /// Scalar potential felt by particle j, with optional derivative orders.
  static Expr V(int j, std::vector<std::string> orders = {});
  /// Kinetic momentum components P - eA.
  static Expr pix(int j) { return px(j) - e() * ax(j); }
  static Expr piy(int j) { return py(j) - e() * ay(j); }
  /// Per-particle radius alias x_j^2 + y_j^2.
  static Expr r2(int j) { return pow(x(j), 2) + pow(y(j), 2); }
  /// Summed alias over all particles.
  Expr r2_sum() const;
  /// L_z of particle j: x Py - y Px.
  static Expr lz(int j) { return x(j) * py(j) - y(j) * px(j); }

  /// Side relation for the summed surface, eliminating y_k^2.
  SideRelations surface() const;
};

}  // namespace dcq::mech
