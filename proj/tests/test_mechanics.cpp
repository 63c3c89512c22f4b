#include <doctest.h>

#include "dcq/mechanics/lagrangian.hpp"
#include "dcq/mechanics/phase_space.hpp"
#include "dcq/mechanics/poisson.hpp"

using namespace dcq;
using mech::PhaseSpace;

TEST_CASE("phase space layout") {
  PhaseSpace ps(2);
  auto c = ps.canonical();
  REQUIRE(c.size() == 10);
  CHECK(c.front() == "x1");
  CHECK(c[4] == "lam");
  CHECK(c[5] == "Px1");
  CHECK(c.back() == "Plam");
  CHECK(ps.is_canonical("Py2"));
  CHECK_FALSE(ps.is_canonical("a"));
}

TEST_CASE("canonical Poisson brackets") {
  PhaseSpace ps(2);
  CHECK(simplify(mech::poisson(PhaseSpace::x(1), PhaseSpace::px(1), ps) - Expr(1)).is_zero());
  CHECK(mech::poisson(PhaseSpace::x(1), PhaseSpace::px(2), ps).is_zero());
  CHECK(mech::poisson(PhaseSpace::x(1), PhaseSpace::y(1), ps).is_zero());
  CHECK(simplify(mech::poisson(PhaseSpace::lam(), PhaseSpace::plam(), ps) - Expr(1)).is_zero());
}

TEST_CASE("Poisson bracket is antisymmetric and obeys Leibniz") {
  PhaseSpace ps(1);
  Expr f = PhaseSpace::lz(1), g = PhaseSpace::x(1) * PhaseSpace::px(1);
  CHECK(simplify(mech::poisson(f, g, ps) + mech::poisson(g, f, ps)).is_zero());
  Expr h = PhaseSpace::y(1);
  Expr lhs = mech::poisson(f, g * h, ps);
  Expr rhs = mech::poisson(f, g, ps) * h + g * mech::poisson(f, h, ps);
  CHECK(simplify(lhs - rhs).is_zero());
}

TEST_CASE("constrained Lagrangian is degenerate along the multiplier velocity") {
  auto L = mech::build_lagrangian(2, true);
  auto d = mech::hessian_degeneracy(L);
  CHECK(d.degenerate);
  REQUIRE(d.null_directions.size() == 1);
  CHECK(d.null_directions.front() == "vlam");
}

TEST_CASE("unconstrained Lagrangian is regular") {
  auto L = mech::build_lagrangian(2, false);
  CHECK_FALSE(mech::hessian_degeneracy(L).degenerate);
}

TEST_CASE("Legendre transform gives the minimal-coupling kinetic term") {
  auto L = mech::build_lagrangian(1, true);
  auto h1 = mech::legendre(L);
  auto h3 = mech::reduced_hamiltonian(mech::total_hamiltonian(h1));
  CHECK(h3.variant == mech::HamiltonianVariant::Reduced);
  Expr kin = (pow(PhaseSpace::pix(1), 2) + pow(PhaseSpace::piy(1), 2)) / Expr(2);
  Expr rest = simplify(h3.H - kin);
  CHECK_FALSE(depends_on(rest, "Px1"));
  CHECK_FALSE(depends_on(rest, "lam"));
  CHECK(depends_on(rest, "e"));
}

TEST_CASE("total Hamiltonian carries the multiplier") {
  auto h2 = mech::total_hamiltonian(mech::legendre(mech::build_lagrangian(2, true)));
  CHECK(h2.variant == mech::HamiltonianVariant::Total);
  CHECK(depends_on(h2.H, "u1"));
  CHECK_FALSE(depends_on(h2.H, "vlam"));
}
