#include <doctest.h>

#include "dcq/symexpr/expr.hpp"
#include "dcq/symexpr/matrix.hpp"
#include "dcq/symexpr/serialize.hpp"

#include <cmath>

using namespace dcq;

TEST_CASE("canonical ordering makes sums and products commutative") {
  Expr x = sym("x"), y = sym("y");
  CHECK(simplify(x + y) == simplify(y + x));
  CHECK(simplify(x * y) == simplify(y * x));
  CHECK(simplify(x - x).is_zero());
  CHECK(simplify((x + y) * (x - y) - (pow(x, 2) - pow(y, 2))).is_zero());
}

TEST_CASE("rational arithmetic stays exact") {
  Expr h = num(1, 2), t = num(1, 3);
  CHECK(simplify(h + t) == num(5, 6));
  CHECK(simplify(h * t * Expr(6)) == Expr(1));
}

TEST_CASE("trigonometric identities reduce") {
  Expr c = sym("chi");
  CHECK(simplify(pow(Expr::sin(c), 2) + pow(Expr::cos(c), 2) - Expr(1)).is_zero());
  CHECK(simplify(diff(Expr::sin(c), "chi") - Expr::cos(c)).is_zero());
  CHECK(simplify(diff(Expr::cos(c), "chi") + Expr::sin(c)).is_zero());
}

TEST_CASE("imaginary unit squares to -1") {
  Expr I = Expr::imag();
  CHECK(simplify(I * I + Expr(1)).is_zero());
}

TEST_CASE("derivative rules") {
  Expr x = sym("x"), y = sym("y");
  CHECK(simplify(diff(pow(x, 3) * y, "x") - Expr(3) * pow(x, 2) * y).is_zero());
  CHECK(simplify(diff(Expr(1) / x, "x") + pow(x, -2)).is_zero());
  CHECK(diff(y, "x").is_zero());
}

TEST_CASE("substitution and evaluation") {
  Expr x = sym("x"), y = sym("y");
  Expr e = pow(x, 2) + Expr(3) * y;
  CHECK(simplify(subst(e, {{"y", x}}) - (pow(x, 2) + Expr(3) * x)).is_zero());
  Complex v = eval(e, {{"x", 2.0}, {"y", 1.0}});
  CHECK(v.real() == doctest::Approx(7.0));
  CHECK_THROWS_AS(eval(e, {{"x", 2.0}}), UnboundSymbolError);
}

TEST_CASE("side relations reduce modulo a constraint") {
  Expr x = sym("x"), y = sym("y"), a = sym("a");
  SideRelations rel = SideRelations::from_zero(pow(x, 2) + pow(y, 2) - pow(a, 2), pow(x, 2));
  CHECK(simplify(reduce(pow(x, 2) + pow(y, 2), rel) - pow(a, 2)).is_zero());
  CHECK(equiv(pow(x, 2) * y + pow(y, 3), pow(a, 2) * y, rel).verdict == Verdict::Equal);
}

TEST_CASE("equivalence verdicts") {
  Expr x = sym("x");
  CHECK(equiv(pow(x + Expr(1), 2), pow(x, 2) + Expr(2) * x + Expr(1)).verdict == Verdict::Equal);
  CHECK(equiv(x, x + Expr(1)).verdict == Verdict::NotEqual);
}

TEST_CASE("parse and print round trip") {
  Expr e = parse("x^2 + 3*y - sin(chi)/r");
  CHECK(equiv(parse(e.str()), e).verdict == Verdict::Equal);
  CHECK_THROWS_AS(parse("x +* y"), ParseError);
}

TEST_CASE("json round trip") {
  Expr e = parse("(1/2)*a^(-2)*x1*y1 - I*cos(chi)");
  Expr back = from_json(to_json(e));
  CHECK(simplify(back - e).is_zero());
}

TEST_CASE("matrix inverse and determinant") {
  Expr p = sym("p"), q = sym("q");
  Matrix m = {{p, Expr(1)}, {Expr(0), q}};
  CHECK(simplify(determinant(m) - p * q).is_zero());
  Matrix inv = inverse(m);
  Matrix id = multiply(m, inv);
  CHECK(simplify(id[0][0] - Expr(1)).is_zero());
  CHECK(simplify(id[0][1]).is_zero());
  CHECK(simplify(id[1][1] - Expr(1)).is_zero());
  Matrix sing = {{p, p}, {q, q}};
  CHECK_THROWS_AS(inverse(sing), DivisionByZeroError);
}
