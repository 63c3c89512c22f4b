#pragma once

#include "dcq/dirac/brackets.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dcq::quantum {

/// [u, v] = i {u, v}_D with hbar = 1.
struct CommutatorTable {
  std::vector<std::string> vars;
  std::map<std::pair<std::string, std::string>, Expr> entries;

  const Expr& at(const std::string& u, const std::string& v) const { return entries.at({u, v}); }
};

CommutatorTable quantize(const dirac::BracketTable& bt);

struct CommutatorCheck {
  std::string family, u, v;
  Expr computed, printed;
  Verdict verdict = Verdict::NotEqual;
};

/// Every printed commutator (i times the printed bracket) against `ct`, modulo the surface.
std::vector<CommutatorCheck> compare_printed(const CommutatorTable& ct, int k);

/// The two Weyl orderings of sigma3 for particle j:
///   (-i/2 + x Px + y Py) - e r A  and  (i/2 + Px x + Py y) - e r A.
/// They agree iff [x, Px] + [y, Py] = i.
struct WeylSigma3 {
  int particle = 1;
  Expr left_offset, right_offset;
  /// [x,Px] + [y,Py] from the printed right-hand forms i y^2/(2a^2) + i x^2/(2a^2).
  Expr commutator_sum;
  /// The same with x^2 + y^2 = a^2 (per-particle reading).
  Expr commutator_sum_per_particle;
  /// [x,Px] + [y,Py] straight from the quantized table on the summed surface.
  Expr commutator_sum_table;
  /// (left - right) ordering gap, i.e. -i + commutator_sum, per reading.
  Expr gap_per_particle, gap_table;
  bool orderings_agree_per_particle = false;
  bool orderings_agree_table = false;
};

WeylSigma3 weyl_sigma3(const CommutatorTable& ct, int particle = 1);

/// Operator symbols used in the Hamiltonians: Lz, Pr, Pchi; parameters r, e, A, V.
Expr hamiltonian_lz();
/// Bound particle without the extra constraint.
Expr hamiltonian_bound();

}  // namespace dcq::quantum
