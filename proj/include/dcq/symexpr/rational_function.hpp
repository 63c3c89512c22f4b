#pragma once

// Canonical representation behind simplify(): a Laurent polynomial numerator
// over atoms (symbols, trig/exp atoms, derivative placeholders, fractional
// powers) divided by a product of normalised polynomial factors.

#include "dcq/symexpr/expr.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace dcq::rf {

struct Monomial {
  std::vector<std::pair<Expr, int>> atoms;  // sorted by compare(), exponents != 0
  int imag = 0;                             // power of I, 0 or 1
  std::optional<Expr> exp_arg;              // single combined exp(...) factor

  bool is_one() const { return atoms.empty() && imag == 0 && !exp_arg; }
};

/// Lexicographic monomial order over atom exponents, then I, then exp.
int compare_mono(const Monomial& a, const Monomial& b);

struct MonoGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare_mono(a, b) > 0; }
};

using Poly = std::map<Monomial, Rational, MonoGreater>;

int compare_poly(const Poly& a, const Poly& b);

Poly poly_constant(const Rational& c);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rational& c);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_mul_term(const Poly& a, const Rational& c, const Monomial& m);
/// Exact division; nullopt when `den` does not divide `num`.
std::optional<Poly> poly_exact_div(const Poly& num, const Poly& den);

struct Factor {
  Poly poly;
  int multiplicity = 1;
};

class RatFun {
 public:
  RatFun() = default;
  explicit RatFun(Poly num) : num_(std::move(num)) {}
  static RatFun constant(const Rational& c);
  static RatFun atom(const Expr& a);
  static RatFun imag();
  static RatFun exponential(const Expr& canonical_arg);

  const Poly& num() const { return num_; }
  const std::vector<Factor>& den() const { return den_; }

  bool is_zero() const { return num_.empty(); }
  bool is_constant() const;
  std::optional<Rational> constant_value() const;

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator-() const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  RatFun inverse() const;
  RatFun pow(int n) const;

  bool operator==(const RatFun& o) const;

  /// Split denominator factors by a known factor and cancel against it.
  RatFun with_hint(const Poly& factor) const;

 private:
  void cancel();
  void refine();
  Poly num_;
  std::vector<Factor> den_;  // sorted by compare_poly, normalised (monic, content-free)
};

struct Rule {
  Monomial lhs;
  Poly rhs;
};

RatFun to_ratfun(const Expr& e);
Expr to_expr(const RatFun& r);
Expr poly_to_expr(const Poly& p);

std::vector<Rule> compile_rules(const SideRelations& rel);
RatFun reduce(const RatFun& r, const std::vector<Rule>& rules, int cap = 64);

/// Degree of the numerator in symbol `s` (0 when absent); ignores denominators.
int degree_in(const RatFun& r, const Expr& s);

}  // namespace dcq::rf
