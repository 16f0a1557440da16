#include "atgp/profiler.hpp"

#include <algorithm>

#include "atgp/solver.hpp"

namespace atgp {

std::vector<AltitudeSample> profile_altitudes(const Terrain& terrain,
                                              std::vector<Rational> heights) {
  std::sort(heights.begin(), heights.end());
  Rational top = terrain.y_max();
  std::vector<AltitudeSample> out;
  out.reserve(heights.size());
  for (const Rational& h : heights) {
    if (!(h > top))
      throw InvalidInstance("profile_altitudes: height " + h.to_string() +
                            " is not above the terrain");
    Solution sol = solve(terrain, AltitudeLine{h});
    out.push_back({h, sol.guards.size()});
  }
  return out;
}

}  // namespace atgp
