#pragma once

#include "dcq/mechanics/lagrangian.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dcq::dirac {

enum class Generation { Primary, Secondary };
enum class ConstraintClass { Unknown, First, Second };

const char* generation_name(Generation g);
const char* class_name(ConstraintClass c);

struct Constraint {
  std::string label;  // sigma1, sigma2, ...
  Expr expr;
  Generation generation = Generation::Secondary;
  ConstraintClass cls = ConstraintClass::Unknown;
};

struct ConstraintChain {
  mech::PhaseSpace ps;
  std::vector<Constraint> constraints;
  std::optional<Expr> u1;
  std::string termination;
  SideRelations weak;  // rewrite rules derived from constraints with a clean leading monomial
};

class ChainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Divide by the rational content and fix the sign so the first term made of
/// canonical variables only is positive.
Expr normalise_constraint(const Expr& e, const mech::PhaseSpace& ps);

/// Rewrite rule implied by `c == 0`, if it has a usable leading monomial.
SideRelations weak_rule(const Expr& c, const mech::PhaseSpace& ps);

/// Iterate consistency conditions {sigma_n, H} until the multiplier u1 is fixed.
ConstraintChain generate_chain(const mech::HamiltonianModel& H2, const std::vector<Constraint>& primaries,
                               int cap = 8);
/// Standard pipeline: constrained Lagrangian -> H1 -> H2 -> chain.
ConstraintChain standard_chain(int k);

/// Second class iff the bracket with some other constraint is weakly nonzero.
std::vector<ConstraintClass> classify(ConstraintChain& chain);

}  // namespace dcq::dirac
