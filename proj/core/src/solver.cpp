#include "atgp/solver.hpp"

#include <cstdint>
#include <map>

namespace atgp {

namespace {

struct LiveSub {
  bool alive = true;
  bool whole = true;
  Rational q = 1;
  Rational soft_open;
  Rational open;
  Rational close;
  std::multimap<Rational, std::size_t>::iterator queue_pos;
};

}  // namespace

std::string Trace::digest() const {
  std::string s;
  for (const auto& ev : events) {
    s += 'E';
    s += ev.x.to_string();
    s += ';';
    for (const auto& a : ev.actions) {
      s += a.kind == TraceActionKind::kRemove ? 'R' : 'S';
      s += std::to_string(a.edge);
      s += a.triggering ? '!' : '.';
      s += a.whole_before ? 'w' : 'p';
      s += a.q_before.to_string();
      if (a.kind == TraceActionKind::kSplit) {
        s += '>';
        s += a.q_after.to_string();
        s += '@';
        s += a.close_after.to_string();
      }
      s += ';';
    }
  }
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Solution solve(const Terrain& terrain, const AltitudeLine& altitude) {
  validate_instance({terrain, altitude}, AltitudeMode::kRelaxed);

  MarkSet marks = marks_convex_hull(terrain);
  std::vector<EdgeEvents> events = edge_events(terrain, altitude, marks);
  const std::size_t ecount = terrain.edge_count();

  std::vector<LiveSub> live(ecount);
  std::multimap<Rational, std::size_t> queue;
  for (std::size_t e = 0; e < ecount; ++e) {
    live[e].soft_open = events[e].soft_open;
    live[e].open = events[e].open;
    live[e].close = events[e].close;
    live[e].queue_pos = queue.emplace(events[e].close, e);
  }

  Solution sol;
  Rational g_prev = terrain.x_min();
  bool first = true;

  while (!queue.empty()) {
    Rational g = queue.begin()->first;
    if (!first && !(g > g_prev))
      throw InternalError("sweep stalled at " + g.to_string() + " (trace " + sol.trace.digest() +
                          ")");

    TraceEvent ev{g, {}};
    WitnessContext ctx{g, g_prev, first, g == terrain.x_max(), {}};

    for (std::size_t e = 0; e < ecount; ++e) {
      LiveSub& se = live[e];
      if (!se.alive) continue;
      if (se.open <= g) {
        if (g > se.close)
          throw InternalError("unseen sub-edge fell behind the sweep on edge " +
                              std::to_string(e));
        bool trig = se.close == g;
        ev.actions.push_back({e, TraceActionKind::kRemove, trig, se.whole, se.q, 0, 0});
        if (trig) ctx.triggers.push_back({e, se.whole, se.q});
        queue.erase(se.queue_pos);
        se.alive = false;
      } else if (se.soft_open <= g) {
        // Partially seen: the guard covers a suffix of the remaining interval.
        auto vis =
            visible_subsegment_fast(Point{g, altitude.y}, e, terrain, ParamInterval{0, se.q});
        if (!vis || !(vis->lo.sign() > 0))
          throw InternalError("split disagrees with events on edge " + std::to_string(e));
        Rational q_new = vis->lo;
        SubEdgeEvents sub = subedge_events(e, q_new, marks, terrain, altitude);
        if (!(sub.close > g))
          throw InternalError("split closing did not advance on edge " + std::to_string(e));
        ev.actions.push_back(
            {e, TraceActionKind::kSplit, false, se.whole, se.q, q_new, sub.close});
        se.whole = false;
        se.q = q_new;
        se.soft_open = sub.soft_open;
        se.open = sub.open;
        se.close = sub.close;
        queue.erase(se.queue_pos);
        se.queue_pos = queue.emplace(se.close, e);
      }
    }

    if (ctx.triggers.empty()) throw InternalError("event without a triggering sub-edge");
    sol.guards.push_back(g);
    sol.witnesses.push_back(place_witness(ctx, marks, terrain, altitude));
    sol.trace.events.push_back(std::move(ev));
    g_prev = g;
    first = false;
  }

  refine_witness_realizations(sol.witnesses, sol.guards, marks, terrain, altitude);
  return sol;
}

Solution replay(const Trace& trace, const Terrain& terrain, const AltitudeLine& altitude) {
  validate_instance({terrain, altitude}, AltitudeMode::kRelaxed);

  MarkSet marks = marks_convex_hull(terrain);
  std::vector<EdgeEvents> events = edge_events(terrain, altitude, marks);
  const std::size_t ecount = terrain.edge_count();

  struct ReplaySub {
    bool alive = true;
    bool whole = true;
    Rational q = 1;
    Rational close;
  };
  std::vector<ReplaySub> live(ecount);
  for (std::size_t e = 0; e < ecount; ++e) live[e].close = events[e].close;

  Solution sol;
  sol.trace = trace;
  Rational g_prev = terrain.x_min();
  bool first = true;

  for (const TraceEvent& ev : trace.events) {
    const Rational* min_close = nullptr;
    for (const auto& se : live) {
      if (se.alive && (min_close == nullptr || se.close < *min_close)) min_close = &se.close;
    }
    if (min_close == nullptr) throw TraceError("trace has events past the sweep's end");
    if (*min_close != ev.x) throw TraceError("trace event diverges from the event queue");
    if (!first && !(ev.x > g_prev)) throw TraceError("trace events not strictly increasing");

    WitnessContext ctx{ev.x, g_prev, first, ev.x == terrain.x_max(), {}};
    for (const TraceAction& a : ev.actions) {
      if (a.edge >= ecount || !live[a.edge].alive) throw TraceError("action on a dead edge");
      ReplaySub& se = live[a.edge];
      if (se.whole != a.whole_before || se.q != a.q_before)
        throw TraceError("trace state mismatch on edge " + std::to_string(a.edge));
      if (a.kind == TraceActionKind::kRemove) {
        bool trig = se.close == ev.x;
        if (trig != a.triggering) throw TraceError("triggering flag inconsistent");
        if (trig) ctx.triggers.push_back({a.edge, se.whole, se.q});
        se.alive = false;
      } else {
        if (!(a.q_after < se.q) || !(a.q_after.sign() > 0))
          throw TraceError("split does not shrink the sub-edge");
        if (!(a.close_after > ev.x)) throw TraceError("split closing does not advance");
        se.whole = false;
        se.q = a.q_after;
        se.close = a.close_after;
      }
    }
    if (ctx.triggers.empty()) throw TraceError("event without a triggering sub-edge");
    sol.guards.push_back(ev.x);
    sol.witnesses.push_back(place_witness(ctx, marks, terrain, altitude));
    g_prev = ev.x;
    first = false;
  }

  for (const auto& se : live) {
    if (se.alive) throw TraceError("truncated trace: unseen sub-edges remain");
  }
  refine_witness_realizations(sol.witnesses, sol.guards, marks, terrain, altitude);
  return sol;
}

}  // namespace atgp
