#pragma once

#include "dcq/symexpr/expr.hpp"

#include <array>
#include <stdexcept>

namespace dcq::quantum {

class UnnormalizedState : public std::runtime_error {
 public:
  explicit UnnormalizedState(double norm2);
  double norm2;
};

/// Pure state over two (or three) two-level partitions.
/// Bipartite: eps|11> + coef_gamma|12> + eta|21> + delta|22>.
/// Tripartite amplitudes are indexed by the bit pattern (q1 q2 q3).
struct EntangledState {
  int arity = 2;
  Complex eps{0.0, 0.0}, coef_gamma{0.0, 0.0}, eta{0.0, 0.0}, delta{0.0, 0.0};
  std::array<Complex, 8> amp{};

  static EntangledState bipartite(Complex eps, Complex coef_gamma, Complex eta, Complex delta);
  /// gamma = eta = 0, |eps|^2 + |delta|^2 = 1.
  static EntangledState maximal(Complex eps, Complex delta);
  /// (|000> + |111>)/sqrt(2).
  static EntangledState ghz();

  double norm2() const;
};

/// C = 2|eps delta - gamma eta|. Throws UnnormalizedState beyond `tol`.
double concurrence(const EntangledState& s, double tol = 1e-9);
/// Coffman-Kundu-Wootters residual tangle of a three-qubit pure state.
double three_tangle(const EntangledState& s, double tol = 1e-9);

/// Normalisation constants of the polar wavefunctions: sqrt(2) a^2 and sqrt(2) a^3.
double phi_norm(double a);
double zeta_norm(double a);

/// Psi(chi1, chi2) = phi e^{i chi1 chi2} e^{i(chi1 + chi2)}.
Complex polar_state(double chi1, double chi2, double a);
/// Psi(chi1, chi2, chi3) = zeta e^{i chi1 chi2 chi3} e^{i(chi1 + chi2 + chi3)}.
Complex polar_state3(double chi1, double chi2, double chi3, double a);

}  // namespace dcq::quantum
