#include "atgp/visibility.hpp"

#include <algorithm>

namespace atgp {

namespace {

// First vertex index with x strictly greater than x, vertex_count() if none.
std::size_t first_vertex_right_of(const Terrain& t, const Rational& x) {
  std::size_t lo = 0, hi = t.vertex_count();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (t.vertex(mid).x > x)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

// +1 above, -1 below, 0 on the line through a and b (a.x != b.x).
int side_of_line(const Point& a, const Point& b, const Point& c) {
  return a.x < b.x ? cross_sign(a, b, c) : cross_sign(b, a, c);
}

}  // namespace

bool strictly_above_line(const Point& a, const Point& b, const Point& c) {
  return side_of_line(a, b, c) > 0;
}

bool sees(const Point& a, const Point& b, const Terrain& terrain) {
  const Point& l = a.x <= b.x ? a : b;
  const Point& r = a.x <= b.x ? b : a;
  if (l.x == r.x) return true;  // vertical or identical: nothing strictly between
  std::size_t i = first_vertex_right_of(terrain, l.x);
  for (; i < terrain.vertex_count() && terrain.vertex(i).x < r.x; ++i) {
    if (orientation(l, r, terrain.vertex(i)) == Orientation::kLeft) return false;
  }
  return true;
}

VisibilityInterval visibility_interval(const Point& p, const Terrain& terrain,
                                       const AltitudeLine& altitude) {
  if (!terrain.contains(p)) throw InvalidInstance("visibility_interval: point not on terrain");

  VisibilityInterval out{terrain.x_min(), terrain.x_max()};

  // Right bound: binding blocker is the vertex whose line through p is highest
  // over everything to its right (the max-slope pivot).
  std::size_t i = first_vertex_right_of(terrain, p.x);
  if (i < terrain.vertex_count()) {
    Point pivot = terrain.vertex(i);
    for (std::size_t k = i + 1; k < terrain.vertex_count(); ++k) {
      if (orientation(p, pivot, terrain.vertex(k)) == Orientation::kLeft)
        pivot = terrain.vertex(k);
    }
    if (pivot.y > p.y) {
      auto hit = ray_hit_altitude(Ray{p, pivot}, altitude.y);
      if (hit && hit->x < out.hi) out.hi = hit->x;
    }
  }

  // Left bound, mirrored: above the leftward line p->pivot is the kRight side.
  std::size_t j = first_vertex_right_of(terrain, p.x);
  while (j > 0 && !(terrain.vertex(j - 1).x < p.x)) --j;
  if (j > 0) {
    Point pivot = terrain.vertex(j - 1);
    for (std::size_t k = j - 1; k-- > 0;) {
      if (orientation(p, pivot, terrain.vertex(k)) == Orientation::kRight)
        pivot = terrain.vertex(k);
    }
    if (pivot.y > p.y) {
      auto hit = ray_hit_altitude(Ray{p, pivot}, altitude.y);
      if (hit && hit->x > out.lo) out.lo = hit->x;
    }
  }

  return out;
}

namespace {

// Clip `within` to the part of edge e that is on or above the line through g
// and blocker. nullopt when nothing remains.
std::optional<ParamInterval> clip_edge_by_line(const Point& g, const Point& blocker,
                                               const Segment& e, const ParamInterval& within) {
  int sa = side_of_line(g, blocker, e.a);
  int sb = side_of_line(g, blocker, e.b);
  if (sa >= 0 && sb >= 0) return within;      // edge entirely on or above: no constraint
  if (sa < 0 && sb < 0) return std::nullopt;  // edge entirely strictly below: hidden

  // The line crosses the edge; solve for the crossing parameter.
  Rational dx = blocker.x - g.x, dy = blocker.y - g.y;
  Rational fx = e.b.x - e.a.x, fy = e.b.y - e.a.y;
  Rational denom = dx * fy - dy * fx;
  Rational gx = e.a.x - g.x, gy = e.a.y - g.y;
  Rational t = (gx * dy - gy * dx) / denom;

  ParamInterval r = within;
  if (sa < 0) {
    if (t > r.lo) r.lo = t;
  } else {
    if (t < r.hi) r.hi = t;
  }
  if (r.lo > r.hi) return std::nullopt;
  return r;
}

}  // namespace

std::optional<ParamInterval> visible_subsegment(const Point& g, std::size_t edge_index,
                                                const Terrain& terrain, ParamInterval within) {
  Segment e = terrain.edge(edge_index);
  ParamInterval result = within;

  auto apply = [&](const Point& w) -> bool {
    auto clipped = clip_edge_by_line(g, w, e, result);
    if (!clipped) return false;
    result = *clipped;
    return true;
  };

  if (g.x > e.b.x) {
    for (std::size_t k = edge_index + 1; k < terrain.vertex_count() && terrain.vertex(k).x < g.x;
         ++k) {
      if (!apply(terrain.vertex(k))) return std::nullopt;
    }
  } else if (g.x < e.a.x) {
    std::size_t k = edge_index + 1;
    while (k-- > 0) {
      if (!(terrain.vertex(k).x > g.x)) break;
      if (!apply(terrain.vertex(k))) return std::nullopt;
    }
  }
  // g vertically above the edge's x-range: every sightline stays inside the
  // edge's slab, nothing can block.
  return result;
}

std::optional<ParamInterval> visible_subsegment_fast(const Point& g, std::size_t edge_index,
                                                     const Terrain& terrain, ParamInterval within) {
  Segment e = terrain.edge(edge_index);
  std::optional<Point> pivot;

  if (g.x > e.b.x) {
    // leftward look: a higher line over the edge lies on the kRight side
    for (std::size_t k = edge_index + 1; k < terrain.vertex_count() && terrain.vertex(k).x < g.x;
         ++k) {
      const Point& w = terrain.vertex(k);
      if (!pivot || orientation(g, *pivot, w) == Orientation::kRight) pivot = w;
    }
  } else if (g.x < e.a.x) {
    std::size_t k = edge_index + 1;
    while (k-- > 0) {
      if (!(terrain.vertex(k).x > g.x)) break;
      const Point& w = terrain.vertex(k);
      if (!pivot || orientation(g, *pivot, w) == Orientation::kLeft) pivot = w;
    }
  }
  if (!pivot) return within;
  return clip_edge_by_line(g, *pivot, e, within);
}

}  // namespace atgp
