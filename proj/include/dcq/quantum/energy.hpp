#pragma once

#include "dcq/symexpr/expr.hpp"

#include <string>

namespace dcq::quantum {

/// Inputs of the closed-form energy for the constrained pair. The expression
/// carries one particle index; chi, x, y are that particle's angle and position.
struct EnergyParams {
  double chi = 0;
  double alpha = 0;
  double A = 0;
  double V = 0;
  double e = 1;
  double a = 1;
  /// Radius entering the 1/(2 r^2) prefactors; non-positive means r = a.
  double r = -1;
  double x = 0, y = 0;
};

/// alpha - floor(alpha).
double alpha_bar(double alpha);
/// alpha - 2.
double alpha_prime(double alpha);

struct EnergyReport {
  Complex constrained;
  Complex unconstrained;
  Complex shift;  // constrained - unconstrained
  bool imaginary_part = false;
  EnergyParams params;
  double alpha_bar = 0, alpha_prime = 0;
  std::string reading;
};

/// Closed forms as symbolic expressions in chi, alpha, abar, aprime, A, V, e, a, r, x, y.
Expr energy_constrained_expr();
Expr energy_unconstrained_expr();

EnergyReport energy(const EnergyParams& p);

struct LzProjection {
  double lz1, lz2, total;
};

/// L1 = chi2 - abar, L2 = chi1 - abar.
LzProjection lz_projections(double chi1, double chi2, double alpha);

}  // namespace dcq::quantum
