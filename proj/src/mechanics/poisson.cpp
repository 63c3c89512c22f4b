#include "dcq/mechanics/poisson.hpp"

namespace dcq::mech {

Expr poisson_raw(const Expr& f, const Expr& g, const PhaseSpace& ps) {
  auto q = ps.coordinates();
  auto p = ps.momenta();
  std::vector<Expr> terms;
  for (std::size_t i = 0; i < q.size(); ++i) {
    Expr fq = diff_raw(f, q[i]);
    Expr gp = diff_raw(g, p[i]);
    if (!fq.is_zero() && !gp.is_zero()) terms.push_back(fq * gp);
    Expr fp = diff_raw(f, p[i]);
    Expr gq = diff_raw(g, q[i]);
    if (!fp.is_zero() && !gq.is_zero()) terms.push_back(-(fp * gq));
  }
  return Expr::sum(std::move(terms));
}

Expr poisson(const Expr& f, const Expr& g, const PhaseSpace& ps) { return simplify(poisson_raw(f, g, ps)); }

}  // namespace dcq::mech
