#include "dcq/quantum/state.hpp"

#include <cmath>
#include <string>

namespace dcq::quantum {

UnnormalizedState::UnnormalizedState(double n)
    : std::runtime_error("state is not normalised: |psi|^2 = " + std::to_string(n)), norm2(n) {}

EntangledState EntangledState::bipartite(Complex eps, Complex g, Complex eta, Complex delta) {
  EntangledState s;
  s.arity = 2;
  s.eps = eps;
  s.coef_gamma = g;
  s.eta = eta;
  s.delta = delta;
  return s;
}

EntangledState EntangledState::maximal(Complex eps, Complex delta) { return bipartite(eps, 0.0, 0.0, delta); }

EntangledState EntangledState::ghz() {
  EntangledState s;
  s.arity = 3;
  s.amp[0] = s.amp[7] = Complex(1.0 / std::sqrt(2.0), 0.0);
  return s;
}

double EntangledState::norm2() const {
  double n = 0;
  if (arity == 2) {
    for (Complex c : {eps, coef_gamma, eta, delta}) n += std::norm(c);
  } else {
    for (Complex c : amp) n += std::norm(c);
  }
  return n;
}

double concurrence(const EntangledState& s, double tol) {
  if (s.arity != 2) throw std::invalid_argument("concurrence needs a bipartite state");
  double n = s.norm2();
  if (std::abs(n - 1.0) > tol) throw UnnormalizedState(n);
  return 2.0 * std::abs(s.eps * s.delta - s.coef_gamma * s.eta);
}

double three_tangle(const EntangledState& s, double tol) {
  if (s.arity != 3) throw std::invalid_argument("three_tangle needs a tripartite state");
  double n = s.norm2();
  if (std::abs(n - 1.0) > tol) throw UnnormalizedState(n);
  const auto& a = s.amp;
  Complex d1 = a[0] * a[0] * a[7] * a[7] + a[1] * a[1] * a[6] * a[6] + a[2] * a[2] * a[5] * a[5] +
               a[4] * a[4] * a[3] * a[3];
  Complex d2 = a[0] * a[7] * a[3] * a[4] + a[0] * a[7] * a[5] * a[2] + a[0] * a[7] * a[6] * a[1] +
               a[3] * a[4] * a[5] * a[2] + a[3] * a[4] * a[6] * a[1] + a[5] * a[2] * a[6] * a[1];
  Complex d3 = a[0] * a[6] * a[5] * a[3] + a[7] * a[1] * a[2] * a[4];
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

double phi_norm(double a) { return std::sqrt(2.0) * a * a; }
double zeta_norm(double a) { return std::sqrt(2.0) * a * a * a; }

Complex polar_state(double c1, double c2, double a) {
  return phi_norm(a) * std::exp(Complex(0.0, c1 * c2 + c1 + c2));
}

Complex polar_state3(double c1, double c2, double c3, double a) {
  return zeta_norm(a) * std::exp(Complex(0.0, c1 * c2 * c3 + c1 + c2 + c3));
}

}  // namespace dcq::quantum
