#include "atgp/witness.hpp"

#include <algorithm>

#include "atgp/oracle.hpp"
#include "atgp/solver.hpp"

namespace atgp {

namespace {

// A witness point is usable when its interval starts after the previous guard
// (at or after the span start for the first event) and ends at or before the
// current one.
bool candidate_ok(const VisibilityInterval& vi, const WitnessContext& ctx) {
  bool left_ok = ctx.first_event ? vi.lo >= ctx.prev_guard_x : vi.lo > ctx.prev_guard_x;
  return left_ok && vi.hi <= ctx.guard_x;
}

Rational previous_critical_param(const MarkSet& marks, std::size_t edge, const Rational& q) {
  Rational prev = 0;
  for (const Mark& m : marks.closing[edge]) {
    if (m.t < q && m.t > prev) prev = m.t;
  }
  for (const Mark& m : marks.opening[edge]) {
    if (m.t < q && m.t > prev) prev = m.t;
  }
  return prev;
}

}  // namespace

Witness place_witness(const WitnessContext& ctx, const MarkSet& marks, const Terrain& terrain,
                      const AltitudeLine& altitude) {
  if (ctx.triggers.empty()) throw InvalidInstance("place_witness: empty event context");

  std::vector<const WitnessTrigger*> whole;
  for (const auto& tr : ctx.triggers) {
    if (tr.whole) whole.push_back(&tr);
  }

  if (!whole.empty()) {
    auto vertex_witness = [&](std::size_t edge, std::size_t t01) {
      const Point& v = terrain.vertex(edge + t01);
      return Witness{Witness::Kind::kVertex, edge, Rational(static_cast<int>(t01)),
                     Rational(static_cast<int>(t01)), v};
    };
    // Rightmost triggering whole edge with a convex left and reflex right vertex.
    for (auto it = whole.rbegin(); it != whole.rend(); ++it) {
      std::size_t e = (*it)->edge;
      if (!terrain.vertex_is_convex(e) || !terrain.vertex_is_reflex(e + 1)) continue;
      if (candidate_ok(visibility_interval(terrain.vertex(e), terrain, altitude), ctx))
        return vertex_witness(e, 0);
    }
    // Span-end closings: a convex left vertex alone suffices.
    for (auto it = whole.rbegin(); it != whole.rend(); ++it) {
      std::size_t e = (*it)->edge;
      if (!terrain.vertex_is_convex(e)) continue;
      if (candidate_ok(visibility_interval(terrain.vertex(e), terrain, altitude), ctx))
        return vertex_witness(e, 0);
    }
    // Boundary fallback: the rightmost triggering edge's right endpoint.
    return vertex_witness(whole.back()->edge, 1);
  }

  // Interval-only event: eps-left witness at the rightmost boundary.
  const WitnessTrigger& tr = ctx.triggers.back();
  Rational prev = previous_critical_param(marks, tr.edge, tr.q);
  Rational realized = (tr.q + prev) / Rational(2);
  return Witness{Witness::Kind::kEpsLeft, tr.edge, tr.q, realized,
                 terrain.point_on_edge(tr.edge, realized)};
}

void refine_witness_realizations(std::vector<Witness>& witnesses,
                                 const std::vector<Rational>& guards, const MarkSet& marks,
                                 const Terrain& terrain, const AltitudeLine& altitude) {
  std::optional<Rational> next_lo;       // final lo of the witness to the right
  std::optional<Rational> next_lo_half;  // its lo under one further halving
  for (std::size_t i = witnesses.size(); i-- > 0;) {
    Witness& w = witnesses[i];
    if (w.kind == Witness::Kind::kVertex) {
      VisibilityInterval vi = visibility_interval(w.realized_point, terrain, altitude);
      next_lo = vi.lo;
      next_lo_half = vi.lo;
      continue;
    }
    const Rational& g = guards[i];
    auto eval = [&](const Rational& t) {
      return visibility_interval(terrain.point_on_edge(w.edge, t), terrain, altitude);
    };
    auto hi_ok = [&](const Rational& hi) {
      if (hi <= g) return true;
      return next_lo && hi < *next_lo && next_lo_half && hi < *next_lo_half;
    };

    VisibilityInterval vi = eval(w.realized_t);
    Rational eps = w.t - w.realized_t;
    for (int iter = 0; iter < 128 && !hi_ok(vi.hi); ++iter) {
      eps /= Rational(2);
      w.realized_t = w.t - eps;
      vi = eval(w.realized_t);
    }
    if (!hi_ok(vi.hi)) {
      // The bound does not contract toward this boundary; the interval's
      // minimum sits at an earlier candidate point. Use the rightmost one.
      std::vector<Rational> cands{0};
      for (const Mark& m : marks.closing[w.edge]) {
        if (m.t > Rational(0) && m.t < w.t) cands.push_back(m.t);
      }
      std::sort(cands.begin(), cands.end());
      for (auto it = cands.rbegin(); it != cands.rend(); ++it) {
        VisibilityInterval cv = eval(*it);
        if (cv.hi <= g) {
          w.realized_t = *it;
          vi = cv;
          break;
        }
      }
    }
    w.realized_point = terrain.point_on_edge(w.edge, w.realized_t);
    next_lo = vi.lo;
    Rational half_t = w.t - (w.t - w.realized_t) / Rational(2);
    next_lo_half = eval(half_t).lo;
  }
}

Certificate certify(const Solution& solution, const Terrain& terrain,
                    const AltitudeLine& altitude) {
  Certificate cert;
  cert.counts_match =
      !solution.guards.empty() && solution.witnesses.size() == solution.guards.size();

  for (const Witness& w : solution.witnesses) {
    cert.witness_intervals.push_back(visibility_interval(w.realized_point, terrain, altitude));
  }

  std::vector<VisibilityInterval> sorted = cert.witness_intervals;
  std::sort(sorted.begin(), sorted.end(),
            [](const VisibilityInterval& a, const VisibilityInterval& b) { return a.lo < b.lo; });
  cert.pairwise_disjoint = true;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (!(sorted[i].hi < sorted[i + 1].lo)) cert.pairwise_disjoint = false;
  }

  cert.coverage_ok = verify_coverage(solution.guards, terrain, altitude);
  return cert;
}

}  // namespace atgp
