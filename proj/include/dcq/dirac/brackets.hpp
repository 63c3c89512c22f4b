#pragma once

#include "dcq/dirac/matrix.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dcq::dirac {

enum class Flavor { Poisson, Dirac, Commutator };
const char* flavor_name(Flavor f);

struct BracketTable {
  Flavor flavor = Flavor::Dirac;
  std::vector<std::string> vars;
  std::map<std::pair<std::string, std::string>, Expr> entries;

  const Expr& at(const std::string& u, const std::string& v) const { return entries.at({u, v}); }
};

/// Constraint gradients and Delta evaluated at one phase-space point.
struct NumericPoint {
  Binding binding;
  std::vector<std::vector<Complex>> grad;  // [constraint][canonical variable]
  NumMatrix delta;
};

/// Chain + inverted constraint matrix with cached constraint gradients.
class DiracSystem {
 public:
  DiracSystem(ConstraintChain chain, ConstraintMatrix cm);
  /// Build the standard k-particle system.
  static DiracSystem standard(int k);

  const ConstraintChain& chain() const { return chain_; }
  const ConstraintMatrix& matrix() const { return cm_; }
  const mech::PhaseSpace& ps() const { return chain_.ps; }

  /// {f,g}_P - sum {f,s_m} D_mn {s_n,g}, canonicalised; `reduced` applies the
  /// summed surface relation afterwards.
  Expr bracket(const Expr& f, const Expr& g, bool reduced = true) const;
  /// Unsimplified form for numeric evaluation (and for nesting).
  Expr bracket_raw(const Expr& f, const Expr& g) const;
  /// Numeric value at a binding; Delta is evaluated from the off-surface inverse.
  Complex bracket_numeric(const Expr& f, const Expr& g, const Binding& b) const;
  NumericPoint prepare(const Binding& b) const;
  Complex bracket_numeric(const Expr& f, const Expr& g, const NumericPoint& np) const;

  BracketTable table(const std::vector<std::string>& vars, bool reduced = true) const;
  /// Particle variables x_j, y_j, Px_j, Py_j.
  std::vector<std::string> particle_vars() const;

 private:
  std::vector<Complex> gradient(const Expr& f, const Binding& b) const;

  ConstraintChain chain_;
  ConstraintMatrix cm_;
  std::vector<std::string> canon_;
  std::vector<std::vector<Expr>> grad_;
};

}  // namespace dcq::dirac
