#include "dcq/quantum/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dcq::quantum {

namespace {

Expr chi() { return sym(kChi); }
Expr r() { return sym("r"); }
Expr alpha() { return sym("alpha"); }
Expr erA() { return sym("e") * sym("r") * sym("A"); }

}  // namespace

MomentumAnsatz solve_momentum_ansatz(double tol, int probes) {
  MomentumAnsatz a;
  Expr I = Expr::imag();
  Expr s = Expr::sin(chi()), c = Expr::cos(chi());
  // [x, P_x] = (i/r) mu x' must equal i y^2/r^2, with x' = -y; likewise [y, P_y] with y' = x.
  Expr x = sym("x"), y = sym("y");
  std::map<std::string, Expr> polar{{"x", r() * c}, {"y", r() * s}};
  a.mu = subst(I * pow(y, 2) / pow(r(), 2) / (I / r() * -y), polar);
  a.nu = subst(I * pow(x, 2) / pow(r(), 2) / (I / r() * x), polar);
  // beta = erA + c1 cos + c2 sin, gamma = erA + c1 sin - c2 cos solves the ODE pair;
  // i beta cos + i gamma sin = -1 + i erA (cos + sin) fixes c1 = i, c2 stays free (alpha).
  Expr c1 = I, c2 = alpha();
  a.beta = simplify(erA() + c1 * c + c2 * s);
  a.gamma_fn = simplify(erA() + c1 * s - c2 * c);

  Expr r1 = diff(a.beta, kChi) + a.gamma_fn - erA();
  Expr r2 = diff(a.gamma_fn, kChi) - a.beta + erA();
  Expr eom = simplify(I * a.beta * c + I * a.gamma_fn * s + Expr(1) - I * erA() * (c + s));
  a.ode_symbolic = simplify(r1).is_zero() && simplify(r2).is_zero() && eom.is_zero();

  Binding base{{"alpha", 0.37}, {"e", 1.1}, {"r", 1.3}, {"A", 0.45}};
  std::vector<double> angles;
  for (int i = 0; i < probes; ++i) angles.push_back(2 * std::numbers::pi * (i + 0.5) / probes);
  const double h = 1e-5;
  auto fd = [&](const Expr& f, double x) {
    Binding p = base, m = base;
    p[kChi] = x + h;
    m[kChi] = x - h;
    return (eval(f, p) - eval(f, m)) / (2 * h);
  };
  double worst = 0;
  for (double x : angles) {
    Binding b = base;
    b[kChi] = x;
    Complex era = eval(erA(), b);
    worst = std::max(worst, std::abs(fd(a.beta, x) + eval(a.gamma_fn, b) - era));
    worst = std::max(worst, std::abs(fd(a.gamma_fn, x) - eval(a.beta, b) + era));
  }
  a.ode_residual = worst;
  if (!a.ode_symbolic || worst > tol) throw AnsatzError("momentum ansatz does not satisfy its ODE system", worst);
  return a;
}

OperatorForm operator+(const OperatorForm& a, const OperatorForm& b) { return {a.d + b.d, a.m + b.m}; }
OperatorForm operator-(const OperatorForm& a, const OperatorForm& b) { return {a.d - b.d, a.m - b.m}; }
OperatorForm scale(const OperatorForm& op, const Expr& c) { return {c * op.d, c * op.m}; }

OperatorForm anticommutator_derivative(const Expr& c, const Expr& s) {
  // c (s f)' + s c f' = 2 c s f' + c s' f
  return {Expr(2) * c * s, c * diff(s, kChi)};
}

OperatorForm anticommutator_lz(const Expr& g) {
  // g(-i f' - alpha f) + (-i (g f)' - alpha g f)
  Expr I = Expr::imag();
  return {Expr(-2) * I * g, -I * diff(g, kChi) - Expr(2) * alpha() * g};
}

OperatorForm conjugate_phase(const OperatorForm& op) {
  // e^{i a chi} (d d/dchi + m) e^{-i a chi} f = d f' + (m - i a d) f
  return {op.d, op.m - Expr::imag() * alpha() * op.d};
}

OperatorForm lz_operator() { return {-Expr::imag(), -alpha()}; }

OperatorForm simplify(const OperatorForm& op) { return {dcq::simplify(op.d), dcq::simplify(op.m)}; }

bool is_zero(const OperatorForm& op) {
  OperatorForm s = simplify(op);
  return s.d.is_zero() && s.m.is_zero();
}

namespace {

Expr pin_zeros(const Expr& e, const Binding& params) {
  std::map<std::string, Expr> zeros;
  for (const auto& [k, v] : params)
    if (v == Complex(0.0, 0.0)) zeros.emplace(k, Expr(0));
  return zeros.empty() ? e : dcq::simplify(subst_raw(e, zeros));
}

}  // namespace

CMatrix fourier_matrix(const OperatorForm& op, const Binding& params, const FourierOptions& opt) {
  Expr d = pin_zeros(op.d, params), m = pin_zeros(op.m, params);
  const int K = opt.nodes, dim = 2 * opt.N + 1;
  std::vector<Complex> dv(K), mv(K);
  std::vector<double> chis(K);
  Binding b = params;
  for (int q = 0; q < K; ++q) {
    chis[q] = 2 * std::numbers::pi * q / K;
    b[kChi] = chis[q];
    dv[q] = eval(d, b);
    mv[q] = eval(m, b);
  }
  CMatrix M(dim, std::vector<Complex>(dim));
  for (int row = 0; row < dim; ++row) {
    int mm = row - opt.N;
    for (int col = 0; col < dim; ++col) {
      int n = col - opt.N;
      Complex acc(0.0, 0.0);
      for (int q = 0; q < K; ++q)
        acc += std::exp(Complex(0.0, (n - mm) * chis[q])) * (dv[q] * Complex(0.0, n) + mv[q]);
      M[row][col] = acc / static_cast<double>(K);
    }
  }
  return M;
}

double hermiticity_defect(const CMatrix& m) {
  double worst = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) worst = std::max(worst, std::abs(m[i][j] - std::conj(m[j][i])));
  return worst;
}

double hermiticity_defect(const OperatorForm& op, const Binding& params, const FourierOptions& opt) {
  return hermiticity_defect(fourier_matrix(op, params, opt));
}

Complex apply(const OperatorForm& op, const Binding& params, double x, Complex f, Complex fprime) {
  Binding b = params;
  b[kChi] = x;
  return eval(pin_zeros(op.d, params), b) * fprime + eval(pin_zeros(op.m, params), b) * f;
}

MomentumOperators momentum_operators(const MomentumAnsatz& ans) {
  MomentumOperators o;
  Expr I = Expr::imag();
  Expr s = Expr::sin(chi()), c = Expr::cos(chi());
  o.px_direct = simplify(OperatorForm{-I * ans.mu / r(), ans.beta / r()});
  o.py_direct = simplify(OperatorForm{-I * ans.nu / r(), ans.gamma_fn / r()});
  Expr eA = sym("e") * sym("A");
  o.py_printed = simplify(OperatorForm{I * c / r(), I * s / r() - alpha() * c / r() + eA});
  o.py_printed_matches_ansatz = is_zero(o.py_printed - o.py_direct);

  Expr shift = erA() / alpha();
  auto build = [&](const Expr& g) {
    return simplify(scale(conjugate_phase(anticommutator_derivative(I, g + shift)), Expr(1) / (Expr(2) * r())));
  };
  o.px_anticom = build(s);
  o.py_anticom = build(-c);
  o.px_discrepancy = simplify(o.px_direct - o.px_anticom);
  o.py_discrepancy = simplify(o.py_direct - o.py_anticom);
  return o;
}

WeylMomenta momentum_via_weyl() {
  Expr r2 = pow(r(), 2);
  Expr x = r() * Expr::cos(chi()), y = r() * Expr::sin(chi());
  WeylMomenta w;
  w.px = simplify(scale(anticommutator_lz(-y), Expr(1) / (Expr(2) * r2)));
  w.py = simplify(scale(anticommutator_lz(x), Expr(1) / (Expr(2) * r2)));
  return w;
}

}  // namespace dcq::quantum
