#pragma once

#include "atgp/solver.hpp"

namespace atgp {

/// Closed polygon boundary, either orientation, no consecutive duplicates.
struct PolygonRing {
  std::vector<Point> vertices;
};

/// Exact affine map used to reduce a monotone mountain to an ATGP instance:
/// rotation-by-base-direction (scaled by the base length squared), optional
/// vertical reflection, and a translation. forward and inverse compose to the
/// identity exactly.
struct MountainTransform {
  Rational ax = 1;  // base direction x
  Rational ay = 0;  // base direction y
  bool reflect = false;
  Point origin{0, 0};

  Point forward(const Point& p) const;
  Point inverse(const Point& p) const;
  bool is_identity() const { return ax == Rational(1) && ay == Rational(0) && !reflect; }
};

/// A polygon reduced to terrain + altitude line, with the exact back-mapping
/// onto the original polygon's single-segment chain.
struct PolygonReduction {
  Terrain terrain;
  AltitudeLine altitude;
  MountainTransform transform;  // polygon frame -> ATGP frame

  Point guard_to_polygon(const Rational& guard_x) const;
  Point point_to_polygon(const Point& atgp_point) const;
};

/// Reduction for a uni-monotone polygon: the single horizontal chain H above
/// becomes the altitude line, the lower chain the terrain. Vertical end edges
/// are absorbed into the altitude span. Throws InvalidInstance naming the
/// violated condition.
PolygonReduction from_uni_monotone(const PolygonRing& ring);

/// Reduction for a monotone mountain: detects the single-segment base in any
/// orientation, rotates it horizontal with an exact rational map, reflecting
/// if needed so the terrain lies below.
PolygonReduction from_monotone_mountain(const PolygonRing& ring);

/// Vertical projection of an interior point onto H of a uni-monotone polygon.
/// Throws InvalidInstance if g lies outside the polygon.
Point project_guard_to_H(const PolygonRing& ring, const Point& g);

}  // namespace atgp
