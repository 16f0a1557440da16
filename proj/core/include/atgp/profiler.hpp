#pragma once

#include <vector>

#include "atgp/terrain.hpp"

namespace atgp {

struct AltitudeSample {
  Rational height;
  std::size_t guard_count;
};

/// Optimum guard count at each sampled altitude height. Heights must be
/// strictly above the terrain's highest vertex; results are reported as
/// computed, no monotonicity is assumed.
std::vector<AltitudeSample> profile_altitudes(const Terrain& terrain,
                                              std::vector<Rational> heights);

}  // namespace atgp
