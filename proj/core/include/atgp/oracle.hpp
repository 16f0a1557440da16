#pragma once

#include "atgp/preprocess.hpp"

namespace atgp {

/// Exact feasibility check: every edge is covered by the union of the guards'
/// visible sub-segments, computed by closed interval union in parameter space.
bool verify_coverage(const std::vector<Rational>& guards, const Terrain& terrain,
                     const AltitudeLine& altitude);

/// Per-edge events from first principles: direct optimization of
/// visibility_interval over endpoints and naive marks, with a dense-sample
/// sanity band (every sample's interval must contain [open, close]).
/// Must equal preprocess::edge_events exactly.
std::vector<EdgeEvents> events_reference(const Terrain& terrain, const AltitudeLine& altitude);

/// Minimum number of points stabbing every interval (sort by right end, stab
/// rightmost). Greedy is optimal for intervals; validated against the
/// exhaustive search below.
std::size_t greedy_piercing_count(std::vector<VisibilityInterval> intervals);

/// Brute-force minimum piercing for small families (intended for <= 12).
std::size_t exhaustive_piercing_count(const std::vector<VisibilityInterval>& intervals);

/// Lower bound on the optimum guard count: greedy piercing number of the
/// visibility intervals of a critical point set (endpoints + marks, plus
/// `refinement` levels of parameter midpoints). Any guard set must stab every
/// interval, so the bound is sound at every refinement level.
std::size_t piercing_lower_bound(const Terrain& terrain, const AltitudeLine& altitude,
                                 int refinement = 0);

}  // namespace atgp
