#include "dcq/dirac/matrix.hpp"

#include "dcq/mechanics/poisson.hpp"

namespace dcq::dirac {

ConstraintMatrix build_and_invert(const ConstraintChain& chain) {
  const auto& cs = chain.constraints;
  const std::size_t n = cs.size();
  ConstraintMatrix cm;
  cm.phi = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      cm.phi[i][j] = mech::poisson(cs[i].expr, cs[j].expr, chain.ps);
      cm.phi[j][i] = simplify(-cm.phi[i][j]);
    }
  cm.det = determinant(cm.phi);
  if (cm.det.is_zero() || reduce(cm.det, chain.weak).is_zero())
    throw SingularConstraintMatrix("constraint matrix is singular on the constraint surface");
  cm.delta = inverse(cm.phi);
  Expr R = chain.ps.r2_sum();
  for (auto& row : cm.delta)
    for (auto& e : row) e = simplify_with_factor(e, R);
  SideRelations surf = chain.ps.surface();
  cm.delta_reduced = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cm.delta_reduced[i][j] = reduce(cm.delta[i][j], surf);
  return cm;
}

}  // namespace dcq::dirac
