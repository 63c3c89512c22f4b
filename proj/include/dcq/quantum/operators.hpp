#pragma once

#include "dcq/symexpr/expr.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dcq::quantum {

/// Symbols shared by the angular forms: chi (angle), r (radius), alpha, e, A.
inline const std::string kChi = "chi";

/// Momentum ansatz P_x = -(i/r) mu d/dchi + beta/r, P_y = -(i/r) nu d/dchi + gamma_fn/r.
struct MomentumAnsatz {
  Expr mu, nu, beta, gamma_fn;
  /// beta' = -gamma_fn + e r A, gamma_fn' = beta - e r A and the eom condition hold symbolically.
  bool ode_symbolic = false;
  /// Largest finite-difference residual of the same relations over the probe angles.
  double ode_residual = 0;
};

class AnsatzError : public std::runtime_error {
 public:
  AnsatzError(const std::string& what, double residual) : std::runtime_error(what), residual(residual) {}
  double residual;
};

/// Solves mu, nu from the position-momentum commutators on a single circle
/// (x = r cos chi, y = r sin chi) and beta, gamma_fn from the coupled ODE
/// plus the equation-of-motion condition. Checks residuals against `tol`.
MomentumAnsatz solve_momentum_ansatz(double tol = 1e-8, int probes = 50);

/// d(chi) d/dchi + m(chi).
struct OperatorForm {
  Expr d, m;
};

OperatorForm operator+(const OperatorForm& a, const OperatorForm& b);
OperatorForm operator-(const OperatorForm& a, const OperatorForm& b);
OperatorForm scale(const OperatorForm& op, const Expr& c);
/// {c d/dchi, s} for multiplicative s.
OperatorForm anticommutator_derivative(const Expr& c, const Expr& s);
/// {g, -i d/dchi - alpha}.
OperatorForm anticommutator_lz(const Expr& g);
/// e^{i alpha chi} op e^{-i alpha chi}.
OperatorForm conjugate_phase(const OperatorForm& op);
/// -i d/dchi - alpha.
OperatorForm lz_operator();
OperatorForm simplify(const OperatorForm& op);
bool is_zero(const OperatorForm& op);

struct FourierOptions {
  int N = 16;
  int nodes = 512;
};

using CMatrix = std::vector<std::vector<Complex>>;

/// <m|op|n> on e^{i n chi}/sqrt(2 pi), n in [-N, N], by uniform quadrature.
/// Parameters that are zero in `params` are substituted symbolically first.
CMatrix fourier_matrix(const OperatorForm& op, const Binding& params, const FourierOptions& opt = {});
/// max |M - M^dagger| entry.
double hermiticity_defect(const CMatrix& m);
double hermiticity_defect(const OperatorForm& op, const Binding& params, const FourierOptions& opt = {});

/// Applies op to a sampled function: op f at chi given f and f'.
Complex apply(const OperatorForm& op, const Binding& params, double chi, Complex f, Complex fprime);

struct MomentumOperators {
  OperatorForm px_direct, py_direct;    // from the solved ansatz
  OperatorForm py_printed;              // closed form as printed, derivative sign +i cos/r
  OperatorForm px_anticom, py_anticom;  // conjugated anticommutator construction
  OperatorForm px_discrepancy, py_discrepancy;  // direct - anticom
  bool py_printed_matches_ansatz = false;
};

MomentumOperators momentum_operators(const MomentumAnsatz& ans);

/// P_x = -{y, Lz}/(2r^2), P_y = {x, Lz}/(2r^2) after setting the Weyl-ordered sigma3 to zero.
struct WeylMomenta {
  OperatorForm px, py;
};

WeylMomenta momentum_via_weyl();

}  // namespace dcq::quantum
