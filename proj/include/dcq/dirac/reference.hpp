#pragma once

#include "dcq/mechanics/phase_space.hpp"
#include "dcq/symexpr/matrix.hpp"

#include <string>
#include <vector>

namespace dcq::dirac {

/// Closed forms as printed in the source derivation, written for k particles
/// with the summed surface value k a^2 in place of the printed 2a^2.
struct PrintedBracket {
  std::string family;
  std::string u, v;
  Expr printed;
};

std::vector<PrintedBracket> printed_brackets(int k);

/// Which value r_k^2 takes inside the printed inverse matrix.
enum class RadiusReading { Summed, PerParticle };
const char* reading_name(RadiusReading r);

Matrix printed_delta(int k, RadiusReading reading);

Expr printed_sigma(int n, int k);
Expr printed_u1(int k);

/// Weak relations for comparisons: the summed surface plus sigma3 solved for x1*Px1.
SideRelations comparison_relations(int k);

}  // namespace dcq::dirac
