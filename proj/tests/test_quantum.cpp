#include <doctest.h>

#include "dcq/quantum/commutators.hpp"
#include "dcq/quantum/energy.hpp"
#include "dcq/quantum/operators.hpp"
#include "dcq/quantum/state.hpp"

#include <cmath>

using namespace dcq;
using namespace dcq::quantum;

namespace {

const CommutatorTable& table2() {
  static const CommutatorTable t = [] {
    auto ds = dirac::DiracSystem::standard(2);
    return quantize(ds.table(ds.particle_vars()));
  }();
  return t;
}

}  // namespace

TEST_CASE("quantized table matches every printed commutator") {
  for (const auto& c : compare_printed(table2(), 2)) {
    INFO(c.family << " [" << c.u << ", " << c.v << "]");
    CHECK(c.verdict == Verdict::Equal);
  }
}

TEST_CASE("quantize rejects non-Dirac tables") {
  dirac::BracketTable bt;
  bt.flavor = dirac::Flavor::Poisson;
  CHECK_THROWS(quantize(bt));
}

TEST_CASE("single-particle commutators") {
  auto ds = dirac::DiracSystem::standard(1);
  auto ct = quantize(ds.table(ds.particle_vars()));
  Expr x = sym("x1"), a = sym("a");
  CHECK(equiv(ct.at("x1", "Px1"), Expr::imag() * (Expr(1) - pow(x, 2) / pow(a, 2)), ds.ps().surface()));
}

TEST_CASE("Weyl ordering of the angular constraint") {
  auto w = weyl_sigma3(table2(), 1);
  CHECK(simplify(w.commutator_sum_per_particle - Expr::imag() / Expr(2)).is_zero());
  CHECK(simplify(w.gap_per_particle + Expr::imag() / Expr(2)).is_zero());
  CHECK_FALSE(w.orderings_agree_per_particle);
}

TEST_CASE("momentum ansatz") {
  auto a = solve_momentum_ansatz();
  Expr chi = sym(kChi);
  CHECK(simplify(a.mu + Expr::sin(chi)).is_zero());
  CHECK(simplify(a.nu - Expr::cos(chi)).is_zero());
  CHECK(a.ode_symbolic);
  CHECK(a.ode_residual < 1e-8);
}

TEST_CASE("anticommutator momenta are Hermitian, direct ones are not") {
  auto ops = momentum_operators(solve_momentum_ansatz());
  FourierOptions fo{8, 256};
  for (const Binding& p : {Binding{{"r", 1.0}, {"alpha", 0.0}, {"e", 1.0}, {"A", 0.0}},
                           Binding{{"r", 2.0}, {"alpha", 0.7}, {"e", 1.0}, {"A", 0.4}}}) {
    CHECK(hermiticity_defect(ops.px_anticom, p, fo) < 1e-9);
    CHECK(hermiticity_defect(ops.py_anticom, p, fo) < 1e-9);
  }
  Binding p{{"r", 2.0}, {"alpha", 0.7}, {"e", 1.0}, {"A", 0.4}};
  CHECK(hermiticity_defect(ops.px_direct, p, fo) > 1e-3);
  CHECK_FALSE(ops.py_printed_matches_ansatz);
}

TEST_CASE("Fourier matrix of L_z is diagonal") {
  FourierOptions fo{4, 64};
  auto m = fourier_matrix(lz_operator(), {{"alpha", 0.25}}, fo);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      Complex want = i == j ? Complex(i - 4 - 0.25, 0.0) : Complex(0.0, 0.0);
      CHECK(std::abs(m[i][j] - want) < 1e-12);
    }
}

TEST_CASE("Weyl-route momenta are Hermitian") {
  auto w = momentum_via_weyl();
  Binding p{{"r", 1.5}, {"alpha", 0.3}};
  CHECK(hermiticity_defect(w.px, p, {8, 256}) < 1e-9);
  CHECK(hermiticity_defect(w.py, p, {8, 256}) < 1e-9);
}

TEST_CASE("energy shift at the null point") {
  EnergyParams p;
  p.a = std::sqrt(10.0);
  auto r = energy(p);
  CHECK(r.shift.real() == doctest::Approx(0.00625).epsilon(1e-12));
  CHECK(r.shift.imag() == 0.0);
  CHECK_FALSE(r.imaginary_part);
}

TEST_CASE("energy is real without charge and complex with it") {
  EnergyParams p;
  p.a = std::sqrt(10.0);
  p.A = 0.3;
  p.chi = 0.4;
  p.x = 2;
  p.y = 2.45;
  p.e = 0;
  CHECK(energy(p).constrained.imag() == 0.0);
  p.e = 1;
  CHECK(energy(p).imaginary_part);
}

TEST_CASE("fractional parts of alpha") {
  CHECK(alpha_bar(2.3) == doctest::Approx(0.3));
  CHECK(alpha_bar(-0.25) == doctest::Approx(0.75));
  CHECK(alpha_prime(2.3) == doctest::Approx(0.3));
}

TEST_CASE("L_z projections add up") {
  auto l = lz_projections(0.5, 1.2, 0.3);
  CHECK(l.lz1 == doctest::Approx(0.9));
  CHECK(l.lz2 == doctest::Approx(0.2));
  CHECK(l.total == doctest::Approx(1.1));
}

TEST_CASE("entanglement measures") {
  double s = 1 / std::sqrt(2.0);
  CHECK(concurrence(EntangledState::maximal(s, s)) == doctest::Approx(1.0));
  CHECK(concurrence(EntangledState::bipartite(1, 0, 0, 0)) == doctest::Approx(0.0));
  CHECK(concurrence(EntangledState::maximal(0.8, 0.6)) == doctest::Approx(0.96));
  CHECK(three_tangle(EntangledState::ghz()) == doctest::Approx(1.0));
}

TEST_CASE("polar states have constant modulus") {
  const double a = std::sqrt(10.0);
  for (double c1 : {-2.0, 0.1, 3.0})
    for (double c2 : {-1.0, 0.2}) CHECK(std::abs(polar_state(c1, c2, a)) == doctest::Approx(phi_norm(a)));
  CHECK(std::abs(polar_state3(0.1, 0.2, 0.3, a)) == doctest::Approx(zeta_norm(a)));
  CHECK(phi_norm(a) == doctest::Approx(std::sqrt(2.0) * 10));
  CHECK(zeta_norm(a) == doctest::Approx(std::sqrt(2.0) * std::pow(a, 3)));
}
