#pragma once

#include "dcq/dirac/chain.hpp"
#include "dcq/symexpr/matrix.hpp"

namespace dcq::dirac {

struct ConstraintMatrix {
  Matrix phi;            // Phi_mn = {sigma_m, sigma_n}
  Matrix delta;          // inverse of Phi, off the surface
  Matrix delta_reduced;  // inverse with the summed surface relation applied
  Expr det;
};

class SingularConstraintMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws SingularConstraintMatrix when det(Phi) vanishes on the surface.
ConstraintMatrix build_and_invert(const ConstraintChain& chain);

}  // namespace dcq::dirac
