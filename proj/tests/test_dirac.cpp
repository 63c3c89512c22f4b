#include <doctest.h>

#include "dcq/dirac/brackets.hpp"
#include "dcq/dirac/reference.hpp"
#include "dcq/dirac/report.hpp"
#include "dcq/dirac/surface.hpp"

#include <cmath>
#include <random>

using namespace dcq;
using namespace dcq::dirac;
using mech::PhaseSpace;

namespace {

const DiracSystem& two() {
  static const DiracSystem s = DiracSystem::standard(2);
  return s;
}

}  // namespace

TEST_CASE("chain terminates with four second-class constraints") {
  const auto& ch = two().chain();
  REQUIRE(ch.constraints.size() == 4);
  CHECK(ch.constraints[0].generation == Generation::Primary);
  for (const auto& c : ch.constraints) CHECK(c.cls == ConstraintClass::Second);
  CHECK(ch.u1.has_value());
  for (int n = 1; n <= 4; ++n) CHECK(equiv(ch.constraints[static_cast<std::size_t>(n - 1)].expr, printed_sigma(n, 2)));
}

TEST_CASE("multiplier agrees with the closed form modulo the angular-momentum constraint") {
  const auto& u1 = *two().chain().u1;
  CHECK(equiv(u1, printed_u1(2), comparison_relations(2)).verdict == Verdict::Equal);
}

TEST_CASE("constraint matrix is antisymmetric and inverted") {
  const auto& cm = two().matrix();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(simplify(cm.phi[i][j] + cm.phi[j][i]).is_zero());
  CHECK_FALSE(simplify(cm.det).is_zero());
  Matrix summed = printed_delta(2, RadiusReading::Summed);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(equiv(cm.delta[i][j], summed[i][j]));
}

TEST_CASE("Delta Phi is the identity at sampled surface points") {
  SurfaceSampler s(two().chain(), 11);
  for (int n = 0; n < 5; ++n) {
    Binding b = s.sample();
    CHECK(s.residual(b) < 1e-9);
    auto I = multiply(eval_matrix(two().matrix().delta, b), eval_matrix(two().matrix().phi, b));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(I[i][j] - Complex(i == j ? 1.0 : 0.0, 0.0)) < 1e-9);
  }
}

TEST_CASE("every printed bracket family matches on the surface") {
  auto t = two().table(two().particle_vars());
  SideRelations surf = two().ps().surface();
  for (const auto& pb : printed_brackets(2)) {
    INFO(pb.family << " {" << pb.u << ", " << pb.v << "}");
    CHECK(equiv(t.at(pb.u, pb.v), pb.printed, surf).verdict == Verdict::Equal);
  }
}

TEST_CASE("Dirac bracket table is antisymmetric") {
  auto t = two().table({"x1", "Px1", "Py2"});
  CHECK(simplify(t.at("x1", "Px1") + t.at("Px1", "x1")).is_zero());
  CHECK(t.at("Py2", "Py2").is_zero());
}

TEST_CASE("constraints are Casimirs of the Dirac bracket") {
  SurfaceSampler s(two().chain(), 23);
  auto np = two().prepare(s.sample());
  for (const auto& c : two().chain().constraints)
    for (const auto& v : two().ps().canonical()) CHECK(std::abs(two().bracket_numeric(c.expr, sym(v), np)) < 1e-10);
}

TEST_CASE("Jacobi identity at a surface point") {
  SurfaceSampler s(two().chain(), 5);
  auto np = two().prepare(s.sample());
  const auto& d = two();
  auto J = [&](const char* u, const char* v, const char* w) {
    return d.bracket_numeric(d.bracket_raw(sym(u), sym(v)), sym(w), np);
  };
  Complex j = J("x1", "Px2", "Py1") + J("Px2", "Py1", "x1") + J("Py1", "x1", "Px2");
  CHECK(std::abs(j) < 1e-8);
}

TEST_CASE("single particle reduction") {
  DiracSystem one = DiracSystem::standard(1);
  Expr b = one.bracket(PhaseSpace::x(1), PhaseSpace::px(1));
  Expr x = PhaseSpace::x(1), a = PhaseSpace::a();
  CHECK(equiv(b, Expr(1) - pow(x, 2) / pow(a, 2), one.ps().surface()).verdict == Verdict::Equal);
  Expr yy = one.bracket(PhaseSpace::x(1), PhaseSpace::y(1));
  CHECK(simplify(yy).is_zero());
}

TEST_CASE("derivation report carries every comparison") {
  auto r = derive(2);
  CHECK_FALSE(r.comparisons.empty());
  auto j = report_json(r);
  CHECK(j.contains("chain"));
  CHECK(j.contains("delta"));
  CHECK(j.contains("brackets"));
  CHECK(report_text(r).find("sigma4") != std::string::npos);
}
