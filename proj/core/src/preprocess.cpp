#include "atgp/preprocess.hpp"

#include <algorithm>

namespace atgp {

namespace {

Rational edge_param_of(const Terrain& t, std::size_t edge, const Point& p) {
  Segment e = t.edge(edge);
  return (p.x - e.a.x) / (e.b.x - e.a.x);
}

// Closing-side (right sweep) marks via the incremental suffix upper hull.
// Every mark corresponds to a hull edge popped while inserting the edge's
// left vertex, so the total count is bounded by n.
std::vector<std::vector<Mark>> closing_marks_hull(const Terrain& t) {
  const std::size_t n = t.vertex_count();
  std::vector<std::vector<Mark>> out(t.edge_count());
  std::vector<std::size_t> hull;  // back() is the leftmost hull vertex
  hull.push_back(n - 1);
  for (std::size_t i = n - 1; i-- > 0;) {
    while (hull.size() >= 2) {
      std::size_t u = hull[hull.size() - 1];
      std::size_t w = hull[hull.size() - 2];
      if (orientation(t.vertex(i), t.vertex(u), t.vertex(w)) == Orientation::kRight) break;
      auto hit = ray_hit_edge(Ray{t.vertex(w), t.vertex(u)}, t.edge(i));
      if (hit) {
        out[i].push_back({i, edge_param_of(t, i, *hit), *hit, w});
      } else if (u == i + 1 && u + 1 < n && t.vertex_is_convex(u)) {
        // Valley endpoint: the popped edge grazes the terrain at u itself.
        out[i].push_back({i, 1, t.vertex(u), u});
      }
      hull.pop_back();
    }
    hull.push_back(i);
    std::reverse(out[i].begin(), out[i].end());
  }
  return out;
}

// Closing-side marks by brute-force pair enumeration.
std::vector<std::vector<Mark>> closing_marks_naive(const Terrain& t) {
  const std::size_t n = t.vertex_count();
  std::vector<std::vector<Mark>> out(t.edge_count());
  for (std::size_t w = 1; w < n; ++w) {
    for (std::size_t u = 0; u < w; ++u) {
      if (!sees(t.vertex(u), t.vertex(w), t)) continue;
      Ray ray{t.vertex(w), t.vertex(u)};
      for (std::size_t e = u; e-- > 0;) {
        auto hit = ray_hit_edge(ray, t.edge(e));
        if (hit) {
          out[e].push_back({e, edge_param_of(t, e, *hit), *hit, w});
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i + 1 < t.edge_count(); ++i) {
    if (t.vertex_is_convex(i + 1)) out[i].push_back({i, 1, t.vertex(i + 1), i + 1});
  }
  for (auto& list : out)
    std::sort(list.begin(), list.end(), [](const Mark& a, const Mark& b) { return a.t < b.t; });
  return out;
}

// Maps a closing-family mark list computed on the mirrored terrain back into
// the original frame, where it describes the opening family.
std::vector<std::vector<Mark>> unmirror_marks(const Terrain& original,
                                              std::vector<std::vector<Mark>> mirrored) {
  const std::size_t n = original.vertex_count();
  const std::size_t ecount = original.edge_count();
  std::vector<std::vector<Mark>> out(ecount);
  for (std::size_t me = 0; me < mirrored.size(); ++me) {
    std::size_t e = ecount - 1 - me;
    for (auto it = mirrored[me].rbegin(); it != mirrored[me].rend(); ++it) {
      out[e].push_back({e, Rational(1) - it->t, Point{-it->point.x, it->point.y},
                        n - 1 - it->stored_vertex});
    }
  }
  return out;
}

}  // namespace

std::size_t MarkSet::closing_count() const {
  std::size_t c = 0;
  for (const auto& l : closing) c += l.size();
  return c;
}

std::size_t MarkSet::opening_count() const {
  std::size_t c = 0;
  for (const auto& l : opening) c += l.size();
  return c;
}

MarkSet marks_naive(const Terrain& terrain) {
  MarkSet out;
  out.closing = closing_marks_naive(terrain);
  out.opening = unmirror_marks(terrain, closing_marks_naive(terrain.mirrored()));
  return out;
}

MarkSet marks_convex_hull(const Terrain& terrain) {
  MarkSet out;
  out.closing = closing_marks_hull(terrain);
  out.opening = unmirror_marks(terrain, closing_marks_hull(terrain.mirrored()));
  return out;
}

BoundTable right_visibility_bounds(const Terrain& terrain, const AltitudeLine& altitude,
                                   const std::vector<std::vector<Rational>>& edge_queries) {
  const std::size_t n = terrain.vertex_count();
  BoundTable out;
  out.vertex.assign(n, terrain.x_max());
  out.query.resize(terrain.edge_count());

  std::vector<std::size_t> hull;  // back() is the leftmost hull vertex
  auto hull_pt = [&](std::size_t j) -> const Point& {  // j counted left to right
    return terrain.vertex(hull[hull.size() - 1 - j]);
  };
  // Tangent from p (strictly left of the hull): binary search for the vertex
  // whose supporting line from p is highest over the suffix.
  auto tangent_bound = [&](const Point& p) -> Rational {
    if (hull.empty()) return terrain.x_max();
    std::size_t lo = 0, hi = hull.size() - 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (orientation(p, hull_pt(mid), hull_pt(mid + 1)) == Orientation::kLeft)
        lo = mid + 1;
      else
        hi = mid;
    }
    const Point& pivot = hull_pt(lo);
    if (!(pivot.y > p.y)) return terrain.x_max();
    auto hit = ray_hit_altitude(Ray{p, pivot}, altitude.y);
    return (hit && hit->x < terrain.x_max()) ? hit->x : terrain.x_max();
  };

  for (std::size_t i = n; i-- > 0;) {
    out.vertex[i] = tangent_bound(terrain.vertex(i));
    if (i < terrain.edge_count() && i < edge_queries.size()) {
      for (const Rational& q : edge_queries[i]) {
        if (q.sign() <= 0)
          out.query[i].push_back(out.vertex[i]);
        else if (q >= Rational(1))
          out.query[i].push_back(out.vertex[i + 1]);
        else
          out.query[i].push_back(tangent_bound(terrain.point_on_edge(i, q)));
      }
    }
    while (hull.size() >= 2 &&
           orientation(terrain.vertex(i), terrain.vertex(hull[hull.size() - 1]),
                       terrain.vertex(hull[hull.size() - 2])) != Orientation::kRight) {
      hull.pop_back();
    }
    hull.push_back(i);
  }
  return out;
}

namespace {

BoundTable left_visibility_bounds(const Terrain& terrain, const AltitudeLine& altitude,
                                  const std::vector<std::vector<Rational>>& edge_queries) {
  const std::size_t n = terrain.vertex_count();
  const std::size_t ecount = terrain.edge_count();
  Terrain mirror = terrain.mirrored();
  std::vector<std::vector<Rational>> mq(ecount);
  for (std::size_t e = 0; e < edge_queries.size(); ++e) {
    for (const Rational& q : edge_queries[e]) mq[ecount - 1 - e].push_back(Rational(1) - q);
  }
  BoundTable rb = right_visibility_bounds(mirror, altitude, mq);
  BoundTable out;
  out.vertex.resize(n);
  out.query.resize(ecount);
  for (std::size_t i = 0; i < n; ++i) out.vertex[i] = -rb.vertex[n - 1 - i];
  for (std::size_t e = 0; e < ecount; ++e) {
    for (const Rational& v : rb.query[ecount - 1 - e]) out.query[e].push_back(-v);
  }
  return out;
}

}  // namespace

std::vector<EdgeEvents> edge_events(const Terrain& terrain, const AltitudeLine& altitude,
                                    const MarkSet& marks) {
  const std::size_t ecount = terrain.edge_count();
  std::vector<std::vector<Rational>> closing_q(ecount), opening_q(ecount);
  for (std::size_t e = 0; e < ecount; ++e) {
    for (const Mark& m : marks.closing[e]) closing_q[e].push_back(m.t);
    for (const Mark& m : marks.opening[e]) opening_q[e].push_back(m.t);
  }
  BoundTable rb = right_visibility_bounds(terrain, altitude, closing_q);
  BoundTable lb = left_visibility_bounds(terrain, altitude, opening_q);

  std::vector<EdgeEvents> out;
  out.reserve(ecount);
  for (std::size_t e = 0; e < ecount; ++e) {
    Rational close = min(rb.vertex[e], rb.vertex[e + 1]);
    for (const Rational& v : rb.query[e]) close = min(close, v);
    Rational open = max(lb.vertex[e], lb.vertex[e + 1]);
    for (const Rational& v : lb.query[e]) open = max(open, v);
    out.push_back({lb.vertex[e + 1], open, close});
  }
  return out;
}

namespace {

// Candidate parameters of the closed prefix interval [0, q]: the left vertex,
// the family's marks inside, and q itself.
std::vector<Rational> prefix_candidates(const std::vector<Mark>& family, const Rational& q) {
  std::vector<Rational> out;
  out.push_back(0);
  for (const Mark& m : family) {
    if (m.t > Rational(0) && m.t <= q) out.push_back(m.t);
  }
  out.push_back(q);
  return out;
}

}  // namespace

SubEdgeEvents subedge_events(std::size_t edge, const Rational& q_param, const MarkSet& marks,
                             const Terrain& terrain, const AltitudeLine& altitude) {
  if (q_param.sign() <= 0) throw InvalidInstance("subedge_events: empty interval");
  SubEdgeEvents out{terrain.x_min(), terrain.x_min(), terrain.x_max()};
  Point qp = terrain.point_on_edge(edge, q_param);
  out.soft_open = visibility_interval(qp, terrain, altitude).lo;
  for (const Rational& t : prefix_candidates(marks.opening[edge], q_param)) {
    out.open = max(out.open, visibility_interval(terrain.point_on_edge(edge, t), terrain, altitude).lo);
  }
  for (const Rational& t : prefix_candidates(marks.closing[edge], q_param)) {
    out.close = min(out.close, visibility_interval(terrain.point_on_edge(edge, t), terrain, altitude).hi);
  }
  return out;
}

Rational closing_of_interval(std::size_t edge, const Rational& q_param, const MarkSet& marks,
                             const Terrain& terrain, const AltitudeLine& altitude) {
  if (q_param.sign() <= 0) throw InvalidInstance("closing_of_interval: empty interval");
  Rational close = terrain.x_max();
  for (const Rational& t : prefix_candidates(marks.closing[edge], q_param)) {
    close = min(close, visibility_interval(terrain.point_on_edge(edge, t), terrain, altitude).hi);
  }
  return close;
}

std::optional<Rational> closing_ray_shortcut(std::size_t edge, const Rational& q_param,
                                             const MarkSet& marks, const Terrain& terrain,
                                             const AltitudeLine& altitude) {
  const auto& list = marks.closing[edge];
  auto it = std::lower_bound(list.begin(), list.end(), q_param,
                             [](const Mark& m, const Rational& v) { return m.t < v; });
  if (it == list.end()) return std::nullopt;
  Point qp = terrain.point_on_edge(edge, q_param);
  const Point& pivot = terrain.vertex(it->stored_vertex);
  if (qp == pivot) return std::nullopt;
  auto hit = ray_hit_altitude(Ray{qp, pivot}, altitude.y);
  if (!hit || !(hit->x > qp.x)) return std::nullopt;
  return min(hit->x, terrain.x_max());
}

}  // namespace atgp
