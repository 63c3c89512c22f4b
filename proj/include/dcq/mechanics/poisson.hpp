#pragma once

#include "dcq/mechanics/phase_space.hpp"

namespace dcq::mech {

/// Canonical Poisson bracket over all pairs of `ps`, including (lam, Plam).
Expr poisson(const Expr& f, const Expr& g, const PhaseSpace& ps);
/// Same sum without canonicalisation; for numeric evaluation only.
Expr poisson_raw(const Expr& f, const Expr& g, const PhaseSpace& ps);

}  // namespace dcq::mech
