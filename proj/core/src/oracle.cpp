#include "atgp/oracle.hpp"

#include <algorithm>
#include <set>

namespace atgp {

bool verify_coverage(const std::vector<Rational>& guards, const Terrain& terrain,
                     const AltitudeLine& altitude) {
  for (std::size_t e = 0; e < terrain.edge_count(); ++e) {
    std::vector<ParamInterval> pieces;
    for (const Rational& gx : guards) {
      auto vis = visible_subsegment(Point{gx, altitude.y}, e, terrain);
      if (vis) pieces.push_back(*vis);
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const ParamInterval& a, const ParamInterval& b) { return a.lo < b.lo; });
    Rational covered = 0;
    bool started = false;
    for (const auto& p : pieces) {
      if (!started) {
        if (p.lo.sign() > 0) return false;
        covered = p.hi;
        started = true;
        continue;
      }
      if (p.lo > covered) return false;  // open gap
      if (p.hi > covered) covered = p.hi;
    }
    if (!started || covered < Rational(1)) return false;
  }
  return true;
}

std::vector<EdgeEvents> events_reference(const Terrain& terrain, const AltitudeLine& altitude) {
  MarkSet marks = marks_naive(terrain);
  std::vector<EdgeEvents> out;
  out.reserve(terrain.edge_count());
  constexpr int kSamples = 5;
  for (std::size_t e = 0; e < terrain.edge_count(); ++e) {
    std::vector<Rational> params{0, 1};
    for (const Mark& m : marks.closing[e]) params.push_back(m.t);
    for (const Mark& m : marks.opening[e]) params.push_back(m.t);
    Rational open = terrain.x_min(), close = terrain.x_max();
    for (const Rational& t : params) {
      VisibilityInterval vi =
          visibility_interval(terrain.point_on_edge(e, t), terrain, altitude);
      open = max(open, vi.lo);
      close = min(close, vi.hi);
    }
    Rational soft =
        visibility_interval(terrain.point_on_edge(e, 1), terrain, altitude).lo;
    // Sanity band: interior samples can only see from a superset of [open, close].
    for (int k = 1; k <= kSamples; ++k) {
      VisibilityInterval vi = visibility_interval(
          terrain.point_on_edge(e, Rational(k, kSamples + 1)), terrain, altitude);
      if (vi.lo > open || vi.hi < close)
        throw InternalError("events_reference: sample interval outside [open, close]");
    }
    out.push_back({soft, open, close});
  }
  return out;
}

std::size_t greedy_piercing_count(std::vector<VisibilityInterval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const VisibilityInterval& a, const VisibilityInterval& b) { return a.hi < b.hi; });
  std::size_t count = 0;
  const Rational* stab = nullptr;
  for (const auto& iv : intervals) {
    if (stab == nullptr || iv.lo > *stab) {
      stab = &iv.hi;
      ++count;
    }
  }
  return count;
}

std::size_t exhaustive_piercing_count(const std::vector<VisibilityInterval>& intervals) {
  if (intervals.empty()) return 0;
  std::vector<Rational> positions;
  for (const auto& iv : intervals) positions.push_back(iv.hi);
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  const std::size_t m = positions.size();
  if (m > 20) throw std::invalid_argument("exhaustive_piercing_count: family too large");
  std::size_t best = intervals.size();
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::size_t k = static_cast<std::size_t>(__builtin_popcount(mask));
    if (k >= best) continue;
    bool all = true;
    for (const auto& iv : intervals) {
      bool stabbed = false;
      for (std::size_t j = 0; j < m && !stabbed; ++j) {
        if ((mask >> j) & 1u) stabbed = iv.contains(positions[j]);
      }
      if (!stabbed) {
        all = false;
        break;
      }
    }
    if (all) best = k;
  }
  return best;
}

std::size_t piercing_lower_bound(const Terrain& terrain, const AltitudeLine& altitude,
                                 int refinement) {
  MarkSet marks = marks_convex_hull(terrain);
  std::vector<VisibilityInterval> intervals;
  for (std::size_t e = 0; e < terrain.edge_count(); ++e) {
    std::set<Rational> params{Rational(0), Rational(1)};
    for (const Mark& m : marks.closing[e]) params.insert(m.t);
    for (const Mark& m : marks.opening[e]) params.insert(m.t);
    for (int level = 0; level < refinement; ++level) {
      std::vector<Rational> mids;
      const Rational* prev = nullptr;
      for (const Rational& t : params) {
        if (prev) mids.push_back((*prev + t) / Rational(2));
        prev = &t;
      }
      params.insert(mids.begin(), mids.end());
    }
    for (const Rational& t : params) {
      intervals.push_back(visibility_interval(terrain.point_on_edge(e, t), terrain, altitude));
    }
  }
  return greedy_piercing_count(std::move(intervals));
}

}  // namespace atgp
