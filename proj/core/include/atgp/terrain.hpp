#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "atgp/geom.hpp"

namespace atgp {

/// Thrown when an input instance violates a structural precondition.
class InvalidInstance : public std::runtime_error {
 public:
  explicit InvalidInstance(const std::string& what) : std::runtime_error(what) {}
};

/// Internal invariant breach; carries the solver trace when available.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// x-monotone chain of line segments. Vertices are strictly increasing in x
/// and no three consecutive vertices are collinear (collinear runs are merged
/// at construction).
class Terrain {
 public:
  static Terrain from_vertices(std::vector<Point> vertices);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return vertices_.size() - 1; }
  const Point& vertex(std::size_t i) const { return vertices_[i]; }
  std::span<const Point> vertices() const { return vertices_; }
  Segment edge(std::size_t i) const { return {vertices_[i], vertices_[i + 1]}; }

  const Rational& x_min() const { return vertices_.front().x; }
  const Rational& x_max() const { return vertices_.back().x; }
  Rational y_max() const;

  /// Point at parameter t in [0,1] along edge i.
  Point point_on_edge(std::size_t i, const Rational& t) const;

  /// Terrain height at x (x within span). On a vertex x, the vertex's y.
  Rational y_at(const Rational& x) const;

  /// Index of an edge whose closed x-range contains x.
  std::size_t edge_at(const Rational& x) const;

  /// True if p lies on the chain (on some edge, endpoints included).
  bool contains(const Point& p) const;

  /// Vertex convexity per the polygon-above convention: a valley is convex,
  /// a peak is reflex. Chain endpoints count as convex.
  bool vertex_is_convex(std::size_t i) const;
  bool vertex_is_reflex(std::size_t i) const { return !vertex_is_convex(i); }

  /// Mirror image about x = 0 with reversed vertex order. Used to derive
  /// left-side machinery from the right-side implementation.
  Terrain mirrored() const;

 private:
  explicit Terrain(std::vector<Point> v) : vertices_(std::move(v)) {}
  std::vector<Point> vertices_;
};

struct AltitudeLine {
  Rational y;
};

enum class AltitudeMode {
  kStrict,   // y strictly above every vertex
  kRelaxed,  // equality permitted at the first and last vertex (polygon adapter)
};

struct Instance {
  Terrain terrain;
  AltitudeLine altitude;
};

/// Throws InvalidInstance if the altitude line violates the mode's height rule.
void validate_instance(const Instance& inst, AltitudeMode mode = AltitudeMode::kStrict);

}  // namespace atgp
