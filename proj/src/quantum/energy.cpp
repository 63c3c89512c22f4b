#include "dcq/quantum/energy.hpp"

#include <cmath>

namespace dcq::quantum {

namespace {

const char* kReading =
    "1/(2r^2) multiplies every bracketed term through eV; 1/(16a^2) and the imaginary eA term stand outside; "
    "square brackets inside the first square are grouping";

Expr common_square() {
  // (1/2 - [1/2 - abar])^2 - abar (2 chi - 1) + (chi^2 - alpha)
  Expr abar = sym("abar"), chi = sym("chi");
  return pow(num(1, 2) - (num(1, 2) - abar), 2) - abar * (Expr(2) * chi - Expr(1)) + (pow(chi, 2) - sym("alpha"));
}

}  // namespace

double alpha_bar(double alpha) { return alpha - std::floor(alpha); }
double alpha_prime(double alpha) { return alpha - 2; }

Expr energy_constrained_expr() {
  Expr e = sym("e"), A = sym("A"), a2 = pow(sym("a"), 2), r = sym("r");
  Expr x = sym("x"), y = sym("y"), chi = sym("chi");
  Expr inner = common_square() - e * A / (Expr(2) * a2) * (chi - sym("aprime")) * (x - y) +
               num(1, 2) * pow(e * A, 2) + e * sym("V");
  return inner / (Expr(2) * pow(r, 2)) + Expr(1) / (Expr(16) * a2) -
         Expr::imag() * e * A / (Expr(2) * a2) * (r / Expr(2) + x + y);
}

Expr energy_unconstrained_expr() {
  Expr e = sym("e"), A = sym("A"), r = sym("r");
  return common_square() / (Expr(2) * pow(r, 2)) - e * A / r * (sym("chi") - sym("aprime")) +
         num(1, 2) * pow(e * A, 2) + e * sym("V");
}

EnergyReport energy(const EnergyParams& p) {
  EnergyReport rep;
  rep.params = p;
  if (!(rep.params.r > 0)) rep.params.r = p.a;
  rep.alpha_bar = alpha_bar(p.alpha);
  rep.alpha_prime = alpha_prime(p.alpha);
  rep.reading = kReading;
  Binding b{{"chi", p.chi},   {"alpha", p.alpha},  {"abar", rep.alpha_bar}, {"aprime", rep.alpha_prime},
            {"A", p.A},       {"V", p.V},          {"e", p.e},              {"a", p.a},
            {"r", rep.params.r}, {"x", p.x},       {"y", p.y}};
  rep.constrained = eval(energy_constrained_expr(), b);
  rep.unconstrained = eval(energy_unconstrained_expr(), b);
  rep.shift = rep.constrained - rep.unconstrained;
  rep.imaginary_part = rep.constrained.imag() != 0.0;
  return rep;
}

LzProjection lz_projections(double chi1, double chi2, double alpha) {
  double ab = alpha_bar(alpha);
  return {chi2 - ab, chi1 - ab, chi1 + chi2 - 2 * ab};
}

}  // namespace dcq::quantum
