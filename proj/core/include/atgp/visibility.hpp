#pragma once

#include <optional>

#include "atgp/terrain.hpp"

namespace atgp {

/// Portion of the altitude line that sees a given terrain point: all x in
/// [lo, hi]. Always contains the x of the point itself and stays within the
/// terrain's span.
struct VisibilityInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// c strictly above the line through a and b (a.x != b.x required).
bool strictly_above_line(const Point& a, const Point& b, const Point& c);

/// Visibility between two points over the terrain: the segment between them is
/// nowhere strictly below T. Grazing contact counts as visible. Exact: only
/// terrain vertices strictly between the two x-coordinates can block.
bool sees(const Point& a, const Point& b, const Terrain& terrain);

/// Visibility interval on the altitude line of a terrain point p.
/// Throws InvalidInstance if p does not lie on the terrain.
VisibilityInterval visibility_interval(const Point& p, const Terrain& terrain,
                                       const AltitudeLine& altitude);

/// Closed interval in edge-parameter space.
struct ParamInterval {
  Rational lo;
  Rational hi;
};

/// Sub-interval of edge `edge_index` (restricted to `within`) visible from g
/// on the altitude line, or nullopt if nothing is visible. Reference
/// implementation: intersection of one admissible interval per blocking
/// vertex between g and the edge; the result is always a single interval.
std::optional<ParamInterval> visible_subsegment(const Point& g, std::size_t edge_index,
                                                const Terrain& terrain,
                                                ParamInterval within = {0, 1});

/// Single-ray shortcut: locates the binding blocker by an orientation scan and
/// shoots one ray. Agrees with visible_subsegment on all inputs (validated by
/// the test suite); used on the solver's hot path.
std::optional<ParamInterval> visible_subsegment_fast(const Point& g, std::size_t edge_index,
                                                     const Terrain& terrain,
                                                     ParamInterval within = {0, 1});

}  // namespace atgp
