#include "atgp/adapters.hpp"

#include <algorithm>

namespace atgp {

Point MountainTransform::forward(const Point& p) const {
  Rational qx = p.x - origin.x, qy = p.y - origin.y;
  Rational rx = ax * qx + ay * qy;
  Rational ry = ax * qy - ay * qx;
  if (reflect) ry = -ry;
  return {rx, ry};
}

Point MountainTransform::inverse(const Point& p) const {
  Rational ry = reflect ? -p.y : p.y;
  Rational d = ax * ax + ay * ay;
  Rational qx = (ax * p.x - ay * ry) / d;
  Rational qy = (ay * p.x + ax * ry) / d;
  return {qx + origin.x, qy + origin.y};
}

Point PolygonReduction::guard_to_polygon(const Rational& guard_x) const {
  return transform.inverse(Point{guard_x, altitude.y});
}

Point PolygonReduction::point_to_polygon(const Point& atgp_point) const {
  return transform.inverse(atgp_point);
}

namespace {

void validate_ring(const PolygonRing& ring) {
  const auto& v = ring.vertices;
  if (v.size() < 3) throw InvalidInstance("polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == v[(i + 1) % v.size()])
      throw InvalidInstance("polygon has a degenerate zero-length edge");
  }
}

// Chain from ring[from] to ring[to] walking forward (wrapping), inclusive.
std::vector<Point> chain_between(const PolygonRing& ring, std::size_t from, std::size_t to) {
  std::vector<Point> out;
  std::size_t n = ring.vertices.size();
  for (std::size_t i = from;; i = (i + 1) % n) {
    out.push_back(ring.vertices[i]);
    if (i == to) break;
  }
  return out;
}

// Validates and normalizes a candidate lower chain whose endpoints sit on the
// altitude level: left-to-right order, vertical end edges trimmed, strict
// x-monotonicity, nothing at or above the altitude except the two ends.
std::vector<Point> normalize_lower_chain(std::vector<Point> chain, const Rational& altitude_y,
                                         const char* what) {
  if (chain.size() < 2) throw InvalidInstance(std::string(what) + ": chain too short");
  if (chain.front().x > chain.back().x) std::reverse(chain.begin(), chain.end());
  // Vertical drops from the chain's two shared corners are part of the ends.
  if (chain.size() >= 2 && chain[0].x == chain[1].x) chain.erase(chain.begin());
  if (chain.size() >= 2 && chain[chain.size() - 1].x == chain[chain.size() - 2].x)
    chain.pop_back();
  if (chain.size() < 2) throw InvalidInstance(std::string(what) + ": chain degenerates");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!(chain[i].x < chain[i + 1].x))
      throw InvalidInstance(std::string(what) + ": opposite chain is not x-monotone");
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    bool endpoint = i == 0 || i + 1 == chain.size();
    if (chain[i].y > altitude_y || (!endpoint && chain[i].y == altitude_y))
      throw InvalidInstance(std::string(what) + ": chain reaches the single-segment side");
  }
  return chain;
}

}  // namespace

PolygonReduction from_uni_monotone(const PolygonRing& ring) {
  validate_ring(ring);
  const auto& v = ring.vertices;
  const std::size_t n = v.size();

  Rational x_lo = v[0].x, x_hi = v[0].x;
  for (const auto& p : v) {
    x_lo = min(x_lo, p.x);
    x_hi = max(x_hi, p.x);
  }

  // H: the unique horizontal edge spanning the full x-range with no vertex above it.
  std::size_t h_index = n;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    if (a.y != b.y) continue;
    if (min(a.x, b.x) != x_lo || max(a.x, b.x) != x_hi) continue;
    bool above = false;
    for (const auto& p : v) above = above || p.y > a.y;
    if (above) continue;
    if (h_index != n) throw InvalidInstance("uni-monotone: multiple horizontal top chains");
    h_index = i;
  }
  if (h_index == n)
    throw InvalidInstance("uni-monotone: no single horizontal chain spanning the x-range above the polygon");

  Rational h_y = v[h_index].y;
  std::vector<Point> chain = chain_between(ring, (h_index + 1) % n, h_index);
  chain = normalize_lower_chain(std::move(chain), h_y, "uni-monotone");

  PolygonReduction out{Terrain::from_vertices(std::move(chain)), AltitudeLine{h_y},
                       MountainTransform{}};
  validate_instance({out.terrain, out.altitude}, AltitudeMode::kRelaxed);
  return out;
}

PolygonReduction from_monotone_mountain(const PolygonRing& ring) {
  validate_ring(ring);
  // A horizontal base above its chain is exactly the uni-monotone case.
  try {
    return from_uni_monotone(ring);
  } catch (const InvalidInstance&) {
  }

  const auto& v = ring.vertices;
  const std::size_t n = v.size();
  std::string last_error = "monotone mountain: no single-segment chain found";
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    MountainTransform tr;
    tr.origin = a;
    tr.ax = b.x - a.x;
    tr.ay = b.y - a.y;

    std::vector<Point> mapped;
    mapped.reserve(n - 1);
    std::size_t from = (i + 1) % n;
    for (std::size_t k = from;; k = (k + 1) % n) {
      mapped.push_back(tr.forward(v[k]));
      if (k == i) break;
    }
    // Decide the reflection: the opposite chain must lie below the base line.
    bool any_above = false, any_below = false;
    for (const auto& p : mapped) {
      if (p.y.sign() > 0) any_above = true;
      if (p.y.sign() < 0) any_below = true;
    }
    if (any_above && any_below) continue;  // base edge crossed by the chain: not the base
    if (any_above) {
      tr.reflect = true;
      for (auto& p : mapped) p.y = -p.y;
    }
    try {
      std::vector<Point> chain = normalize_lower_chain(std::move(mapped), 0, "monotone mountain");
      PolygonReduction out{Terrain::from_vertices(std::move(chain)), AltitudeLine{0}, tr};
      validate_instance({out.terrain, out.altitude}, AltitudeMode::kRelaxed);
      return out;
    } catch (const InvalidInstance& e) {
      last_error = e.what();
      continue;
    }
  }
  throw InvalidInstance(last_error);
}

Point project_guard_to_H(const PolygonRing& ring, const Point& g) {
  PolygonReduction red = from_uni_monotone(ring);
  if (g.x < red.terrain.x_min() || g.x > red.terrain.x_max() || g.y > red.altitude.y ||
      g.y < red.terrain.y_at(g.x))
    throw InvalidInstance("project_guard_to_H: point outside the polygon");
  return Point{g.x, red.altitude.y};
}

}  // namespace atgp
