#include "dcq/dirac/brackets.hpp"

#include "dcq/mechanics/poisson.hpp"
#include "dcq/symexpr/rational_function.hpp"

namespace dcq::dirac {

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Poisson: return "poisson";
    case Flavor::Dirac: return "dirac";
    case Flavor::Commutator: return "commutator";
  }
  return "?";
}

DiracSystem::DiracSystem(ConstraintChain chain, ConstraintMatrix cm)
    : chain_(std::move(chain)), cm_(std::move(cm)), canon_(chain_.ps.canonical()) {
  for (const auto& c : chain_.constraints) {
    std::vector<Expr> g;
    for (const auto& v : canon_) g.push_back(diff(c.expr, v));
    grad_.push_back(std::move(g));
  }
}

DiracSystem DiracSystem::standard(int k) {
  ConstraintChain chain = standard_chain(k);
  ConstraintMatrix cm = build_and_invert(chain);
  return DiracSystem(std::move(chain), std::move(cm));
}

Expr DiracSystem::bracket(const Expr& f, const Expr& g, bool reduced) const {
  const auto& cs = chain_.constraints;
  const std::size_t n = cs.size();
  rf::RatFun acc = rf::to_ratfun(mech::poisson(f, g, ps()));
  std::vector<rf::RatFun> fs(n), sg(n);
  for (std::size_t m = 0; m < n; ++m) {
    fs[m] = rf::to_ratfun(mech::poisson(f, cs[m].expr, ps()));
    sg[m] = rf::to_ratfun(mech::poisson(cs[m].expr, g, ps()));
  }
  for (std::size_t m = 0; m < n; ++m) {
    if (fs[m].is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (sg[k].is_zero() || cm_.delta[m][k].is_zero()) continue;
      acc = acc - fs[m] * rf::to_ratfun(cm_.delta[m][k]) * sg[k];
    }
  }
  Expr out = rf::to_expr(acc);
  return reduced ? reduce(out, ps().surface()) : out;
}

Expr DiracSystem::bracket_raw(const Expr& f, const Expr& g) const {
  const auto& cs = chain_.constraints;
  std::vector<Expr> terms{mech::poisson_raw(f, g, ps())};
  for (std::size_t m = 0; m < cs.size(); ++m) {
    Expr fm = mech::poisson_raw(f, cs[m].expr, ps());
    if (fm.is_zero()) continue;
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (cm_.delta[m][k].is_zero()) continue;
      Expr kg = mech::poisson_raw(cs[k].expr, g, ps());
      if (kg.is_zero()) continue;
      terms.push_back(Expr::product({Expr(-1), fm, cm_.delta[m][k], kg}));
    }
  }
  return Expr::sum(std::move(terms));
}

Complex DiracSystem::bracket_numeric(const Expr& f, const Expr& g, const Binding& b) const {
  return bracket_numeric(f, g, prepare(b));
}

NumericPoint DiracSystem::prepare(const Binding& b) const {
  NumericPoint np;
  np.binding = b;
  for (const auto& row : grad_) {
    std::vector<Complex> g;
    for (const auto& e : row) g.push_back(e.is_zero() ? Complex(0.0, 0.0) : eval(e, b));
    np.grad.push_back(std::move(g));
  }
  np.delta = eval_matrix(cm_.delta, b);
  return np;
}

std::vector<Complex> DiracSystem::gradient(const Expr& f, const Binding& b) const {
  std::vector<Complex> g;
  g.reserve(canon_.size());
  for (const auto& v : canon_) {
    if (f.kind() == Kind::Symbol) {
      g.emplace_back(f.name() == v ? 1.0 : 0.0, 0.0);
      continue;
    }
    Expr d = diff_raw(f, v);
    g.push_back(d.is_zero() ? Complex(0.0, 0.0) : eval(d, b));
  }
  return g;
}

namespace {

// canonical layout is coordinates then momenta, pairwise aligned
Complex poisson_numeric(const std::vector<Complex>& f, const std::vector<Complex>& g) {
  const std::size_t n = f.size() / 2;
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) acc += f[i] * g[n + i] - f[n + i] * g[i];
  return acc;
}

}  // namespace

Complex DiracSystem::bracket_numeric(const Expr& f, const Expr& g, const NumericPoint& np) const {
  const std::size_t n = grad_.size();
  std::vector<Complex> gf = gradient(f, np.binding), gg = gradient(g, np.binding);
  Complex acc = poisson_numeric(gf, gg);
  std::vector<Complex> fs(n), sg(n);
  for (std::size_t m = 0; m < n; ++m) {
    fs[m] = poisson_numeric(gf, np.grad[m]);
    sg[m] = poisson_numeric(np.grad[m], gg);
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k) acc -= fs[m] * np.delta[m][k] * sg[k];
  return acc;
}

std::vector<std::string> DiracSystem::particle_vars() const {
  std::vector<std::string> v;
  for (int j = 1; j <= ps().k; ++j)
    for (const char* p : {"x", "y", "Px", "Py"}) v.push_back(p + std::to_string(j));
  return v;
}

BracketTable DiracSystem::table(const std::vector<std::string>& vars, bool reduced) const {
  BracketTable t;
  t.flavor = Flavor::Dirac;
  t.vars = vars;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    t.entries[{vars[i], vars[i]}] = Expr(0);
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      Expr e = bracket(sym(vars[i]), sym(vars[j]), reduced);
      t.entries[{vars[i], vars[j]}] = e;
      t.entries[{vars[j], vars[i]}] = simplify(-e);
    }
  }
  return t;
}

}  // namespace dcq::dirac
