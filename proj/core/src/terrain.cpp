#include "atgp/terrain.hpp"

#include <algorithm>

namespace atgp {

Terrain Terrain::from_vertices(std::vector<Point> vertices) {
  if (vertices.size() < 2) throw InvalidInstance("terrain needs at least 2 vertices");
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (!(vertices[i].x < vertices[i + 1].x))
      throw InvalidInstance("terrain vertices must be strictly increasing in x (violated at index " +
                            std::to_string(i + 1) + ")");
  }
  // Merge collinear runs: equal consecutive slopes mean a single edge.
  std::vector<Point> merged;
  merged.reserve(vertices.size());
  for (auto& p : vertices) {
    while (merged.size() >= 2 &&
           orientation(merged[merged.size() - 2], merged.back(), p) == Orientation::kCollinear) {
      merged.pop_back();
    }
    merged.push_back(std::move(p));
  }
  return Terrain(std::move(merged));
}

Rational Terrain::y_max() const {
  Rational m = vertices_.front().y;
  for (const auto& v : vertices_) m = max(m, v.y);
  return m;
}

Point Terrain::point_on_edge(std::size_t i, const Rational& t) const {
  const Point& a = vertices_[i];
  const Point& b = vertices_[i + 1];
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

std::size_t Terrain::edge_at(const Rational& x) const {
  if (x < x_min() || x > x_max()) throw InvalidInstance("x outside terrain span");
  auto it = std::upper_bound(vertices_.begin(), vertices_.end(), x,
                             [](const Rational& v, const Point& p) { return v < p.x; });
  std::size_t idx = static_cast<std::size_t>(it - vertices_.begin());
  if (idx == 0) return 0;
  if (idx >= vertices_.size()) return edge_count() - 1;
  return idx - 1;
}

Rational Terrain::y_at(const Rational& x) const {
  std::size_t i = edge_at(x);
  const Point& a = vertices_[i];
  const Point& b = vertices_[i + 1];
  return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
}

bool Terrain::contains(const Point& p) const {
  if (p.x < x_min() || p.x > x_max()) return false;
  return y_at(p.x) == p.y;
}

bool Terrain::vertex_is_convex(std::size_t i) const {
  if (i == 0 || i + 1 == vertices_.size()) return true;
  return orientation(vertices_[i - 1], vertices_[i], vertices_[i + 1]) == Orientation::kLeft;
}

Terrain Terrain::mirrored() const {
  std::vector<Point> out;
  out.reserve(vertices_.size());
  for (auto it = vertices_.rbegin(); it != vertices_.rend(); ++it) out.push_back({-it->x, it->y});
  return Terrain(std::move(out));
}

void validate_instance(const Instance& inst, AltitudeMode mode) {
  const Terrain& t = inst.terrain;
  for (std::size_t i = 0; i < t.vertex_count(); ++i) {
    const Rational& vy = t.vertex(i).y;
    if (vy < inst.altitude.y) continue;
    bool endpoint = i == 0 || i + 1 == t.vertex_count();
    if (mode == AltitudeMode::kRelaxed && endpoint && vy == inst.altitude.y) continue;
    throw InvalidInstance("altitude line not above terrain vertex " + std::to_string(i));
  }
}

}  // namespace atgp
