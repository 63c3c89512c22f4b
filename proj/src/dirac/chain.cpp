#include "dcq/dirac/chain.hpp"

#include "dcq/mechanics/poisson.hpp"
#include "dcq/symexpr/rational_function.hpp"

#include <boost/integer/common_factor.hpp>

namespace dcq::dirac {

const char* generation_name(Generation g) { return g == Generation::Primary ? "primary" : "secondary"; }

const char* class_name(ConstraintClass c) {
  switch (c) {
    case ConstraintClass::First: return "first";
    case ConstraintClass::Second: return "second";
    default: return "unknown";
  }
}

namespace {

bool only_canonical(const Expr& term, const mech::PhaseSpace& ps) {
  auto fs = free_symbols(term);
  if (fs.empty()) return false;
  for (const auto& s : fs)
    if (!ps.is_canonical(s)) return false;
  return true;
}

Rational leading_coefficient(const Expr& term) {
  if (term.is_number()) return term.value();
  if (term.kind() == Kind::Product && term.children().front().is_number()) return term.children().front().value();
  return 1;
}

}  // namespace

Expr normalise_constraint(const Expr& e, const mech::PhaseSpace& ps) {
  rf::RatFun r = rf::to_ratfun(e);
  if (r.is_zero()) return Expr(0);
  boost::multiprecision::cpp_int g = 0, l = 1;
  for (const auto& [m, c] : r.num()) {
    g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(c));
    auto d = boost::multiprecision::denominator(c);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  Rational content = Rational(g) / Rational(l);
  Expr out = simplify(e * Expr(Rational(1) / content));
  std::vector<Expr> terms = out.kind() == Kind::Sum ? out.children() : std::vector<Expr>{out};
  for (const auto& t : terms) {
    if (!only_canonical(t, ps)) continue;
    if (leading_coefficient(t) < 0) out = simplify(-out);
    break;
  }
  return out;
}

SideRelations weak_rule(const Expr& c, const mech::PhaseSpace& ps) {
  SideRelations rel;
  if (c.kind() == Kind::Symbol && ps.is_canonical(c.name())) {
    rel.add(c, Expr(0));
    return rel;
  }
  bool coordinate_only = true;
  for (const auto& s : free_symbols(c))
    if (s.rfind("P", 0) == 0 || s == "lam") coordinate_only = false;
  Expr yk2 = pow(mech::PhaseSpace::y(ps.k), 2);
  if (coordinate_only) {
    try {
      return SideRelations::from_zero(c, yk2);
    } catch (const SymbolicError&) {
    }
  }
  return rel;
}

ConstraintChain generate_chain(const mech::HamiltonianModel& H2, const std::vector<Constraint>& primaries, int cap) {
  if (primaries.empty()) throw ChainError("no primary constraints given");
  ConstraintChain chain{H2.ps, primaries, std::nullopt, "", {}};
  for (const auto& c : primaries) chain.weak = chain.weak.merged(weak_rule(c.expr, H2.ps));
  const std::string u1 = mech::PhaseSpace::u1().name();
  for (int n = 0; n < cap; ++n) {
    const Constraint& last = chain.constraints.back();
    Expr d = mech::poisson(last.expr, H2.H, H2.ps);
    if (depends_on(d, u1)) {
      Expr coef = diff(d, u1);
      if (reduce(coef, chain.weak).is_zero())
        throw ChainError("multiplier coefficient vanishes weakly; cannot solve for u1");
      Expr rest = subst(d, {{u1, Expr(0)}});
      chain.u1 = simplify(-rest / coef);
      chain.termination = "multiplier u1 fixed by consistency of " + last.label;
      return chain;
    }
    if (reduce(d, chain.weak).is_zero()) {
      chain.termination = "consistency of " + last.label + " holds weakly";
      return chain;
    }
    Constraint next{"sigma" + std::to_string(chain.constraints.size() + 1), normalise_constraint(d, H2.ps),
                    Generation::Secondary, ConstraintClass::Unknown};
    chain.weak = chain.weak.merged(weak_rule(next.expr, H2.ps));
    chain.constraints.push_back(std::move(next));
  }
  throw ChainError("constraint chain did not close within " + std::to_string(cap) + " iterations");
}

ConstraintChain standard_chain(int k) {
  auto L = mech::build_lagrangian(k, true);
  auto H2 = mech::total_hamiltonian(mech::legendre(L));
  Constraint s1{"sigma1", mech::PhaseSpace::plam(), Generation::Primary, ConstraintClass::Unknown};
  ConstraintChain chain = generate_chain(H2, {s1});
  classify(chain);
  return chain;
}

std::vector<ConstraintClass> classify(ConstraintChain& chain) {
  std::vector<ConstraintClass> out;
  auto& cs = chain.constraints;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    bool second = false;
    for (std::size_t j = 0; j < cs.size() && !second; ++j) {
      if (i == j) continue;
      Expr b = mech::poisson(cs[i].expr, cs[j].expr, chain.ps);
      if (!reduce(b, chain.weak).is_zero()) second = true;
    }
    cs[i].cls = second ? ConstraintClass::Second : ConstraintClass::First;
    out.push_back(cs[i].cls);
  }
  return out;
}

}  // namespace dcq::dirac
