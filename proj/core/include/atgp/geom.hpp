#pragma once

#include <optional>

#include "atgp/rational.hpp"

namespace atgp {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

enum class Orientation { kLeft, kRight, kCollinear };

/// Exact sign of cross(q - p, r - p). kLeft means r is strictly left of the
/// directed line p -> q. Avoids rational normalization: the sign is computed
/// on cross-multiplied integers.
Orientation orientation(const Point& p, const Point& q, const Point& r);

/// Sign variant of the same predicate: +1 left, -1 right, 0 collinear.
int cross_sign(const Point& p, const Point& q, const Point& r);

struct Segment {
  Point a;
  Point b;
};

/// Directed from origin through `through` and beyond. origin != through.
struct Ray {
  Point origin;
  Point through;
};

/// Point where the ray crosses the horizontal line y = altitude_y, or nullopt
/// if the ray never reaches that height. No clamping to any span; callers
/// clamp. Throws std::invalid_argument on a degenerate ray.
std::optional<Point> ray_hit_altitude(const Ray& r, const Rational& altitude_y);

/// Intersection of the ray portion strictly beyond `through` with the closed
/// segment e. On a collinear overlap, returns the overlap endpoint nearest to
/// `through`. Throws std::invalid_argument on a degenerate ray.
std::optional<Point> ray_hit_edge(const Ray& r, const Segment& e);

}  // namespace atgp
