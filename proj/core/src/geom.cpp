#include "atgp/geom.hpp"

namespace atgp {

namespace {

int sign_of(const BigInt& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }

// Exact rational difference as a (numerator, positive denominator) pair,
// skipping gcd reduction.
struct RawDiff {
  BigInt num;
  BigInt den;
};

RawDiff raw_diff(const Rational& a, const Rational& b) {
  BigInt an = a.numerator(), ad = a.denominator();
  BigInt bn = b.numerator(), bd = b.denominator();
  return {an * bd - bn * ad, ad * bd};
}

}  // namespace

int cross_sign(const Point& p, const Point& q, const Point& r) {
  // Fast path: all inputs on the integer grid.
  if (p.x.is_integer() && p.y.is_integer() && q.x.is_integer() && q.y.is_integer() &&
      r.x.is_integer() && r.y.is_integer()) {
    BigInt ax = q.x.numerator() - p.x.numerator();
    BigInt ay = q.y.numerator() - p.y.numerator();
    BigInt bx = r.x.numerator() - p.x.numerator();
    BigInt by = r.y.numerator() - p.y.numerator();
    return sign_of(ax * by - ay * bx);
  }
  RawDiff ax = raw_diff(q.x, p.x), ay = raw_diff(q.y, p.y);
  RawDiff bx = raw_diff(r.x, p.x), by = raw_diff(r.y, p.y);
  // sign of ax*by - ay*bx with all denominators positive
  return sign_of(ax.num * by.num * (ay.den * bx.den) - ay.num * bx.num * (ax.den * by.den));
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  int s = cross_sign(p, q, r);
  if (s > 0) return Orientation::kLeft;
  if (s < 0) return Orientation::kRight;
  return Orientation::kCollinear;
}

std::optional<Point> ray_hit_altitude(const Ray& r, const Rational& altitude_y) {
  if (r.origin == r.through) throw std::invalid_argument("ray_hit_altitude: degenerate ray");
  Rational dy = r.through.y - r.origin.y;
  if (dy.sign() <= 0) return std::nullopt;  // horizontal or falling, never reaches the line
  Rational t = (altitude_y - r.origin.y) / dy;
  if (t.sign() < 0) return std::nullopt;
  return Point{r.origin.x + t * (r.through.x - r.origin.x), altitude_y};
}

std::optional<Point> ray_hit_edge(const Ray& r, const Segment& e) {
  if (r.origin == r.through) throw std::invalid_argument("ray_hit_edge: degenerate ray");
  Rational dx = r.through.x - r.origin.x, dy = r.through.y - r.origin.y;
  Rational fx = e.b.x - e.a.x, fy = e.b.y - e.a.y;
  Rational denom = dx * fy - dy * fx;
  Rational gx = e.a.x - r.origin.x, gy = e.a.y - r.origin.y;
  if (denom != Rational(0)) {
    Rational t = (gx * fy - gy * fx) / denom;
    Rational s = (gx * dy - gy * dx) / denom;
    if (t > Rational(1) && s >= Rational(0) && s <= Rational(1))
      return Point{e.a.x + s * fx, e.a.y + s * fy};
    return std::nullopt;
  }
  // Parallel. Collinear only if e.a lies on the ray's line.
  if (gx * dy - gy * dx != Rational(0)) return std::nullopt;
  auto ray_param = [&](const Point& p) {
    return dx != Rational(0) ? (p.x - r.origin.x) / dx : (p.y - r.origin.y) / dy;
  };
  Rational ta = ray_param(e.a), tb = ray_param(e.b);
  bool ea_beyond = ta > Rational(1), eb_beyond = tb > Rational(1);
  if (!ea_beyond && !eb_beyond) return std::nullopt;
  if (ea_beyond && eb_beyond) return ta < tb ? e.a : e.b;
  // One endpoint behind: `through` sits on e, and the overlap starts there.
  return r.through;
}

}  // namespace atgp
