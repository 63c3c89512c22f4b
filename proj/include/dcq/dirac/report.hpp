#pragma once

#include "dcq/dirac/brackets.hpp"
#include "dcq/dirac/reference.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace dcq::dirac {

struct Comparison {
  std::string label;
  Expr computed;
  Expr printed;
  Verdict verdict = Verdict::NotEqual;
  std::string relations;  // "none", "surface" or "surface+sigma3"
};

struct DerivationReport {
  int k = 2;
  mech::LagrangianModel lagrangian;
  mech::DegeneracyReport degeneracy;
  mech::HamiltonianModel h1, h2, h3;
  ConstraintChain chain;
  ConstraintMatrix cm;
  BracketTable table;
  std::vector<Comparison> comparisons;
};

/// Full pipeline: Lagrangian -> Hamiltonians -> chain -> Phi/Delta -> table,
/// with every printed closed form compared.
DerivationReport derive(int k);

nlohmann::json report_json(const DerivationReport& r);
std::string report_text(const DerivationReport& r);

}  // namespace dcq::dirac
