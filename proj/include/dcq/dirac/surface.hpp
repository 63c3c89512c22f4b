#pragma once

#include "dcq/dirac/chain.hpp"

#include <random>

namespace dcq::dirac {

/// Random points on the constraint surface: particles placed on the circle of
/// radius a, momenta projected so sigma3 = 0, lam solved from sigma4 = 0,
/// Plam = 0. Potential jets and vector-potential components are random.
class SurfaceSampler {
 public:
  SurfaceSampler(const ConstraintChain& chain, unsigned long long seed = 0xd17acULL);

  Binding sample();
  /// Largest |sigma_m| at the binding.
  double residual(const Binding& b) const;

 private:
  const ConstraintChain* chain_;
  std::mt19937_64 rng_;
};

/// Binding keys for derivatives of V_j up to `max_order`.
std::vector<std::string> potential_keys(int k, int max_order);

}  // namespace dcq::dirac
