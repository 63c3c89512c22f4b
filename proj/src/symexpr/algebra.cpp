#include "dcq/symexpr/expr.hpp"
#include "dcq/symexpr/rational_function.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace dcq {

Expr simplify(const Expr& e) { return rf::to_expr(rf::to_ratfun(e)); }

Expr reduce(const Expr& e, const SideRelations& rel) {
  if (rel.empty()) return simplify(e);
  return rf::to_expr(rf::reduce(rf::to_ratfun(e), rf::compile_rules(rel), rel.iteration_cap));
}

Expr simplify_with_factor(const Expr& e, const Expr& factor) {
  rf::RatFun f = rf::to_ratfun(factor);
  if (!f.den().empty()) return simplify(e);
  return rf::to_expr(rf::to_ratfun(e).with_hint(f.num()));
}

SideRelations SideRelations::merged(const SideRelations& other) const {
  SideRelations r = *this;
  r.rules.insert(r.rules.end(), other.rules.begin(), other.rules.end());
  r.iteration_cap = std::max(iteration_cap, other.iteration_cap);
  return r;
}

SideRelations SideRelations::from_zero(const Expr& expr, const Expr& monomial) {
  rf::RatFun f = rf::to_ratfun(expr);
  rf::RatFun m = rf::to_ratfun(monomial);
  if (!f.den().empty() || m.num().size() != 1 || !m.den().empty())
    throw SymbolicError("from_zero needs a polynomial relation and a single monomial");
  const auto& [mm, mc] = *m.num().begin();
  Rational coef = 0;
  rf::Poly rest;
  for (const auto& [t, c] : f.num()) {
    if (rf::compare_mono(t, mm) == 0) coef = c;
    else rest.emplace(t, c);
  }
  if (coef == 0) throw SymbolicError("monomial " + monomial.str() + " does not occur in " + expr.str());
  SideRelations r;
  r.add(monomial, rf::poly_to_expr(rf::poly_scale(rest, -mc / coef)));
  return r;
}

// ---------------------------------------------------------------------------
// Differentiation

Expr diff_raw(const Expr& e, const std::string& s) {
  switch (e.kind()) {
    case Kind::Number:
    case Kind::Imag: return Expr(0);
    case Kind::Symbol: return Expr(e.name() == s ? 1 : 0);
    case Kind::Deriv: {
      if (std::find(e.deps().begin(), e.deps().end(), s) == e.deps().end()) return Expr(0);
      auto orders = e.orders();
      orders.push_back(s);
      return Expr::deriv(e.name(), e.deps(), orders);
    }
    case Kind::Sin: {
      Expr d = diff_raw(e.children()[0], s);
      return d.is_zero() ? d : Expr::product({Expr::cos(e.children()[0]), d});
    }
    case Kind::Cos: {
      Expr d = diff_raw(e.children()[0], s);
      return d.is_zero() ? d : Expr::product({Expr(-1), Expr::sin(e.children()[0]), d});
    }
    case Kind::Exp: {
      Expr d = diff_raw(e.children()[0], s);
      return d.is_zero() ? d : Expr::product({e, d});
    }
    case Kind::Power: {
      const Expr& b = e.children()[0];
      const Expr& x = e.children()[1];
      if (depends_on(x, s)) throw SymbolicError("cannot differentiate variable exponent in " + e.str());
      Expr db = diff_raw(b, s);
      if (db.is_zero()) return db;
      Expr xm1 = x.is_number() ? Expr(x.value() - 1) : Expr::sum({x, Expr(-1)});
      return Expr::product({x, Expr::power(b, xm1), db});
    }
    case Kind::Product: {
      std::vector<Expr> terms;
      const auto& cs = e.children();
      for (std::size_t i = 0; i < cs.size(); ++i) {
        Expr d = diff_raw(cs[i], s);
        if (d.is_zero()) continue;
        std::vector<Expr> fs = cs;
        fs[i] = d;
        terms.push_back(Expr::product(std::move(fs)));
      }
      return Expr::sum(std::move(terms));
    }
    case Kind::Sum: {
      std::vector<Expr> terms;
      for (const auto& c : e.children()) {
        Expr d = diff_raw(c, s);
        if (!d.is_zero()) terms.push_back(d);
      }
      return Expr::sum(std::move(terms));
    }
  }
  return Expr(0);
}

Expr diff(const Expr& e, const std::string& s) { return simplify(diff_raw(e, s)); }

// ---------------------------------------------------------------------------
// Substitution

Expr subst_raw(const Expr& e, const std::map<std::string, Expr>& map) {
  switch (e.kind()) {
    case Kind::Number:
    case Kind::Imag: return e;
    case Kind::Symbol: {
      auto it = map.find(e.name());
      return it == map.end() ? e : it->second;
    }
    case Kind::Deriv: {
      auto it = map.find(e.deriv_key());
      return it == map.end() ? e : it->second;
    }
    case Kind::Sin: return Expr::sin(subst_raw(e.children()[0], map));
    case Kind::Cos: return Expr::cos(subst_raw(e.children()[0], map));
    case Kind::Exp: return Expr::exp(subst_raw(e.children()[0], map));
    case Kind::Power: return Expr::power(subst_raw(e.children()[0], map), subst_raw(e.children()[1], map));
    case Kind::Product:
    case Kind::Sum: {
      std::vector<Expr> cs;
      cs.reserve(e.children().size());
      for (const auto& c : e.children()) cs.push_back(subst_raw(c, map));
      return e.kind() == Kind::Sum ? Expr::sum(std::move(cs)) : Expr::product(std::move(cs));
    }
  }
  return e;
}

Expr subst(const Expr& e, const std::map<std::string, Expr>& map) { return simplify(subst_raw(e, map)); }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

Complex int_pow(Complex b, long long n) {
  if (n < 0) {
    if (b == Complex(0.0, 0.0)) throw DivisionByZeroError("division by zero during evaluation");
    b = 1.0 / b;
    n = -n;
  }
  Complex r(1.0, 0.0);
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

}  // namespace

Complex eval(const Expr& e, const Binding& b) {
  switch (e.kind()) {
    case Kind::Number: return Complex(e.value().convert_to<double>(), 0.0);
    case Kind::Imag: return Complex(0.0, 1.0);
    case Kind::Symbol: {
      auto it = b.find(e.name());
      if (it == b.end()) throw UnboundSymbolError(e.name());
      return it->second;
    }
    case Kind::Deriv: {
      auto it = b.find(e.deriv_key());
      if (it == b.end()) throw UnboundSymbolError(e.deriv_key());
      return it->second;
    }
    case Kind::Sin: return std::sin(eval(e.children()[0], b));
    case Kind::Cos: return std::cos(eval(e.children()[0], b));
    case Kind::Exp: return std::exp(eval(e.children()[0], b));
    case Kind::Power: {
      Complex base = eval(e.children()[0], b);
      const Expr& x = e.children()[1];
      if (x.is_number() && boost::multiprecision::denominator(x.value()) == 1)
        return int_pow(base, boost::multiprecision::numerator(x.value()).convert_to<long long>());
      Complex ex = eval(x, b);
      if (base == Complex(0.0, 0.0) && ex.real() < 0) throw DivisionByZeroError("division by zero during evaluation");
      return std::pow(base, ex);
    }
    case Kind::Product: {
      Complex r(1.0, 0.0);
      for (const auto& c : e.children()) r *= eval(c, b);
      return r;
    }
    case Kind::Sum: {
      Complex r(0.0, 0.0);
      for (const auto& c : e.children()) r += eval(c, b);
      return r;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Free symbols

namespace {

void collect(const Expr& e, std::set<std::string>& out) {
  if (e.kind() == Kind::Symbol) out.insert(e.name());
  else if (e.kind() == Kind::Deriv) out.insert(e.deriv_key());
  for (const auto& c : e.children()) collect(c, out);
}

}  // namespace

std::vector<std::string> free_symbols(const Expr& e) {
  std::set<std::string> s;
  collect(e, s);
  return {s.begin(), s.end()};
}

bool depends_on(const Expr& e, const std::string& s) {
  if (e.kind() == Kind::Symbol) return e.name() == s;
  if (e.kind() == Kind::Deriv)
    return e.deriv_key() == s || std::find(e.deps().begin(), e.deps().end(), s) != e.deps().end();
  for (const auto& c : e.children())
    if (depends_on(c, s)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Equivalence

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "equal";
    case Verdict::NotEqual: return "not_equal";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

EquivResult equiv(const Expr& a, const Expr& b, const SideRelations& rel, const EquivOptions& opt) {
  EquivResult res;
  Expr ra = reduce(a, rel);
  Expr rb = reduce(b, rel);
  res.canonical_match = ra == rb || reduce(ra - rb, rel).is_zero();

  std::set<std::string> names;
  for (const auto& s : free_symbols(ra)) names.insert(s);
  for (const auto& s : free_symbols(rb)) names.insert(s);

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> dist(0.3, 1.7);
  bool all_agree = true;
  int attempts = 0;
  while (res.probes < opt.probes && attempts < opt.probes * 10) {
    ++attempts;
    Binding bind;
    for (const auto& n : names) bind[n] = Complex(dist(rng), 0.0);
    Complex va, vb;
    try {
      va = eval(ra, bind);
      vb = eval(rb, bind);
    } catch (const DivisionByZeroError&) {
      continue;
    }
    ++res.probes;
    double scale = std::max({std::abs(va), std::abs(vb), 1e-12});
    double rel_diff = std::abs(va - vb) / scale;
    res.max_rel_diff = std::max(res.max_rel_diff, rel_diff);
    if (rel_diff > opt.rel_tol) all_agree = false;
  }
  if (!all_agree) res.verdict = Verdict::NotEqual;
  else if (res.canonical_match) res.verdict = Verdict::Equal;
  else res.verdict = Verdict::Inconclusive;
  return res;
}

}  // namespace dcq
