#pragma once

#include <cstddef>
#include <vector>

#include "atgp/visibility.hpp"

namespace atgp {

/// Point where a grazing vertex-to-vertex ray hits the terrain. Carries the
/// pivot vertex used by the closing-ray shortcut: for closing-side (right
/// sweep) marks the rightmost of the two vertices that defined the ray, except
/// that a valley-endpoint mark stores the valley vertex itself.
struct Mark {
  std::size_t edge;
  Rational t;
  Point point;
  std::size_t stored_vertex;
};

/// Per-edge sorted mark lists for both sweep directions. `closing` marks are
/// breakpoints of the right visibility bound along an edge, `opening` marks
/// the mirrored family for the left bound.
struct MarkSet {
  std::vector<std::vector<Mark>> closing;
  std::vector<std::vector<Mark>> opening;

  std::size_t closing_count() const;
  std::size_t opening_count() const;
};

/// O(n^2) pair-ray enumeration: for every ordered visible vertex pair the ray
/// extension beyond the nearer vertex is intersected with the terrain, plus
/// the valley-endpoint rule.
MarkSet marks_naive(const Terrain& terrain);

/// Incremental convex-hull sweep. Emits at most n marks per family, already
/// sorted, and induces the same edge events as marks_naive.
MarkSet marks_convex_hull(const Terrain& terrain);

/// Per-edge event triple on the altitude line.
///   soft_open: leftmost point seeing the edge's right endpoint (split trigger)
///   open:      leftmost point seeing the whole edge
///   close:     rightmost point seeing the whole edge
struct EdgeEvents {
  Rational soft_open;
  Rational open;
  Rational close;

  friend bool operator==(const EdgeEvents& a, const EdgeEvents& b) {
    return a.soft_open == b.soft_open && a.open == b.open && a.close == b.close;
  }
};

/// Events for all edges. Bounds are computed with the suffix/prefix hull
/// tangent engine; candidates are the edge endpoints plus the marks on the
/// edge, which are exactly the breakpoints of the bound functions.
std::vector<EdgeEvents> edge_events(const Terrain& terrain, const AltitudeLine& altitude,
                                    const MarkSet& marks);

/// Right visibility bounds (the .hi end of visibility_interval) for every
/// vertex and for the given per-edge query parameters, in one right-to-left
/// hull sweep. Exposed for differential tests.
struct BoundTable {
  std::vector<Rational> vertex;
  std::vector<std::vector<Rational>> query;
};
BoundTable right_visibility_bounds(const Terrain& terrain, const AltitudeLine& altitude,
                                   const std::vector<std::vector<Rational>>& edge_queries);

/// Events of the sub-edge [left vertex, q] of an edge; q in (0, 1].
struct SubEdgeEvents {
  Rational soft_open;
  Rational open;
  Rational close;
};
SubEdgeEvents subedge_events(std::size_t edge, const Rational& q_param, const MarkSet& marks,
                             const Terrain& terrain, const AltitudeLine& altitude);

/// Closing point of the still-unseen prefix interval [left vertex, q):
/// minimum right visibility bound over the interval's candidate points,
/// clamped to the span. Throws InvalidInstance if the interval is empty.
Rational closing_of_interval(std::size_t edge, const Rational& q_param, const MarkSet& marks,
                             const Terrain& terrain, const AltitudeLine& altitude);

/// Single-ray shortcut for the same closing: ray from q through the stored
/// vertex of the first closing mark at or right of q. nullopt when there is
/// no such mark or the ray never reaches the altitude line. Validated against
/// closing_of_interval by the test suite.
std::optional<Rational> closing_ray_shortcut(std::size_t edge, const Rational& q_param,
                                             const MarkSet& marks, const Terrain& terrain,
                                             const AltitudeLine& altitude);

}  // namespace atgp
