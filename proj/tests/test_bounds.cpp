#include <doctest.h>

#include "dcq/bounds/bounds.hpp"
#include "dcq/bounds/sweep.hpp"

#include <cmath>

using namespace dcq;
using namespace dcq::bounds;

TEST_CASE("Robertson bound of a commutator value") {
  CHECK(robertson(Complex(0.0, 1.0)) == doctest::Approx(0.25));
  CHECK(robertson(Complex(0.0, 0.0)) == 0.0);
  CHECK(robertson(Expr::imag() * sym("c"), {{"c", 0.9}}) == doctest::Approx(0.2025));
}

TEST_CASE("position-momentum bound under both conventions") {
  ParamPoint p = ParamPoint::position_momentum(2);
  CHECK(position_momentum_bound(p, 1, 'x') == doctest::Approx(0.050625).epsilon(1e-12));
  p.convention = Convention::Full;
  CHECK(position_momentum_bound(p, 1, 'x') == doctest::Approx(0.225625).epsilon(1e-12));
  CHECK_THROWS_AS(position_momentum_bound(p, 1, 'z'), std::invalid_argument);
}

TEST_CASE("single-particle baselines") {
  CHECK(baseline_position_momentum() == doctest::Approx(0.2025).epsilon(1e-12));
  CHECK(baseline_momentum() == doctest::Approx(0.0225).epsilon(1e-12));
}

TEST_CASE("field from potential") {
  const double a = std::sqrt(10.0);
  CHECK(field_from_potential(0.5, a) == doctest::Approx(0.316227766));
  CHECK(field_from_potential(17.8, a) == doctest::Approx(11.2577).epsilon(1e-4));
  CHECK_THROWS_AS(field_from_potential(1, 0), std::invalid_argument);
}

TEST_CASE("shifted point") {
  auto s = shifted_point(1, 3, 2);
  CHECK(s.x == 3);
  CHECK(s.y == 5);
  CHECK(s.r2 == doctest::Approx(34));
}

TEST_CASE("parameter points") {
  auto p = ParamPoint::bipartite();
  CHECK(p.k == 2);
  CHECK(p.a() == doctest::Approx(std::sqrt(10.0)));
  CHECK(p.radius_defect() > 0);
  p.validate();
  p.x.pop_back();
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  CHECK(parse_convention("full") == Convention::Full);
  CHECK(parse_angle_unit("degrees") == AngleUnit::Degrees);
  CHECK_THROWS_AS(parse_convention("half"), std::invalid_argument);
  auto q = ParamPoint::bipartite();
  q.unit = AngleUnit::Degrees;
  CHECK(q.chi(1) == doctest::Approx(std::atan2(2.45, 2.0) * 180 / std::acos(-1.0)));
}

TEST_CASE("bound specs") {
  CHECK(find_spec("Px1-Py1").form == BoundForm::SameParticle);
  CHECK(find_spec("Px1-Px2").form == BoundForm::TableOnly);
  CHECK(find_spec("3:Px1-Py2").arity == 3);
  CHECK_THROWS_AS(find_spec("Q1-Q2"), std::invalid_argument);
}

TEST_CASE("closed form agrees with the quantized table and quadrature oracle") {
  ParamPoint p = ParamPoint::bipartite();
  for (double alpha : {-0.5, 0.0, 1.3}) {
    p.alpha = alpha;
    for (const char* id : {"Px1-Py1", "Px2-Py2"}) {
      const auto& s = find_spec(id);
      CHECK(printed_bound(s, p) == doctest::Approx(table_bound(s, p)).epsilon(1e-6));
    }
  }
}

TEST_CASE("calibrated alpha reproduces the target") {
  ParamPoint p = ParamPoint::bipartite();
  const auto& s = find_spec("Px1-Py1");
  auto roots = calibrate_alpha(s, p, 1.97e-3);
  REQUIRE(roots.size() == 2);
  for (double r : roots) {
    p.alpha = r;
    CHECK(printed_bound(s, p) == doctest::Approx(1.97e-3).epsilon(1e-9));
  }
  CHECK(calibrate_alpha(s, p, -1).empty());
}

TEST_CASE("threshold laws") {
  CHECK(threshold_law(ThresholdKind::Upper, 2) == doctest::Approx(1.63));
  CHECK(threshold_law(ThresholdKind::Upper, 3) == doctest::Approx(2.85));
  CHECK(threshold_law(ThresholdKind::Cutoff, 2) == doctest::Approx(17.8));
  CHECK(threshold_law(ThresholdKind::Cutoff, 3) == doctest::Approx(24.5));
  CHECK_THROWS_AS(threshold_law(ThresholdKind::Upper, 1), std::invalid_argument);
  CHECK(parse_threshold_kind("cutoff") == ThresholdKind::Cutoff);
}

TEST_CASE("calibrated k=2 sweep lands on the intercept") {
  const double base = baseline_momentum();
  for (ThresholdKind kind : {ThresholdKind::Upper, ThresholdKind::Cutoff}) {
    ParamPoint p = ParamPoint::tripartite();
    p.unit = AngleUnit::Degrees;
    p.alpha = calibrate_threshold(kind, p, base).alpha;
    auto r = sweep_threshold(kind, 2, p, base);
    CHECK(r.deviation < 0.01);
    CHECK(r.b_star == doctest::Approx(field_from_potential(r.a_star, p.a())));
    CHECK(r.grid.size() == 400);
  }
}

TEST_CASE("sweep without a crossing throws") {
  ParamPoint p = ParamPoint::tripartite();
  p.unit = AngleUnit::Degrees;
  p.alpha = calibrate_threshold(ThresholdKind::Cutoff, p, baseline_momentum()).alpha;
  SweepOptions so{0, 1, 20, 1e-3};
  CHECK_THROWS_AS(sweep_threshold(ThresholdKind::Cutoff, 2, p, baseline_momentum(), so), NoCrossing);
  SweepOptions bad{1, 0, 20, 1e-3};
  CHECK_THROWS_AS(sweep_threshold(ThresholdKind::Cutoff, 2, p, baseline_momentum(), bad), std::invalid_argument);
}
