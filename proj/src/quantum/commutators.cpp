#include "dcq/quantum/commutators.hpp"

#include "dcq/dirac/reference.hpp"

#include <stdexcept>

namespace dcq::quantum {

namespace P = dcq::mech;

CommutatorTable quantize(const dirac::BracketTable& bt) {
  if (bt.flavor != dirac::Flavor::Dirac) throw std::invalid_argument("quantize needs a Dirac bracket table");
  CommutatorTable ct;
  ct.vars = bt.vars;
  for (const auto& [key, value] : bt.entries) ct.entries.emplace(key, simplify(Expr::imag() * value));
  return ct;
}

std::vector<CommutatorCheck> compare_printed(const CommutatorTable& ct, int k) {
  SideRelations surf = P::PhaseSpace(k).surface();
  std::vector<CommutatorCheck> out;
  for (const auto& pb : dirac::printed_brackets(k)) {
    CommutatorCheck c{pb.family, pb.u, pb.v, ct.at(pb.u, pb.v), simplify(Expr::imag() * pb.printed)};
    c.verdict = equiv(c.computed, c.printed, surf).verdict;
    out.push_back(std::move(c));
  }
  return out;
}

WeylSigma3 weyl_sigma3(const CommutatorTable& ct, int j) {
  WeylSigma3 w;
  w.particle = j;
  Expr I = Expr::imag();
  Expr x = P::PhaseSpace::x(j), y = P::PhaseSpace::y(j), a2 = pow(P::PhaseSpace::a(), 2);
  w.left_offset = -I / Expr(2);
  w.right_offset = I / Expr(2);
  w.commutator_sum = simplify(I * pow(y, 2) / (Expr(2) * a2) + I * pow(x, 2) / (Expr(2) * a2));
  SideRelations per_particle;
  per_particle.add(pow(y, 2), a2 - pow(x, 2));
  w.commutator_sum_per_particle = reduce(w.commutator_sum, per_particle);
  std::string xs = "x" + std::to_string(j), ys = "y" + std::to_string(j);
  w.commutator_sum_table = simplify(ct.at(xs, "P" + xs) + ct.at(ys, "P" + ys));
  Expr offset_gap = w.left_offset - w.right_offset;
  w.gap_per_particle = simplify(offset_gap + w.commutator_sum_per_particle);
  w.gap_table = simplify(offset_gap + w.commutator_sum_table);
  w.orderings_agree_per_particle = w.gap_per_particle.is_zero();
  w.orderings_agree_table = w.gap_table.is_zero();
  return w;
}

Expr hamiltonian_lz() {
  Expr r = sym("r"), e = sym("e"), A = sym("A");
  return pow(sym("Lz"), 2) / (Expr(2) * pow(r, 2)) -
         pow(Expr::imag() / Expr(2) + e * r * A, 2) / (Expr(2) * pow(r, 2)) - e * A * (sym("Pr") - e * A) +
         e * sym("V");
}

Expr hamiltonian_bound() {
  Expr r = sym("r"), e = sym("e"), A = sym("A"), pc = sym("Pchi");
  return pow(pc, 2) / (Expr(2) * pow(r, 2)) + pow(e * A, 2) - e * A / r * pc + e * sym("V");
}

}  // namespace dcq::quantum
