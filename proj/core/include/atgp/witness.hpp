#pragma once

#include "atgp/preprocess.hpp"

namespace atgp {

/// One witness per placed guard. A kVertex witness sits at an edge endpoint;
/// a kEpsLeft witness sits just left of a split boundary q, realized at an
/// exact rational point strictly inside (previous critical point, q).
struct Witness {
  enum class Kind { kVertex, kEpsLeft };
  Kind kind;
  std::size_t edge;
  Rational t;           // anchor parameter: the vertex (0 or 1) or the split boundary q
  Rational realized_t;  // evaluation parameter; equals t for kVertex
  Point realized_point;
};

struct WitnessTrigger {
  std::size_t edge;
  bool whole;
  Rational q;  // right boundary parameter of the sub-edge (1 for whole edges)
};

struct WitnessContext {
  Rational guard_x;
  Rational prev_guard_x;  // span's left end before the first guard
  bool first_event;
  bool clamped;  // the event sits at the span's right end
  std::vector<WitnessTrigger> triggers;
};

/// Witness anchor for one guard placement. Whole-edge events prefer the
/// rightmost triggering edge whose left vertex is convex and right vertex
/// reflex; span-end events fall back to a convex-left edge or the rightmost
/// trigger's right endpoint. Interval-only events place an eps-left witness
/// at the rightmost trigger's boundary.
Witness place_witness(const WitnessContext& ctx, const MarkSet& marks, const Terrain& terrain,
                      const AltitudeLine& altitude);

struct Solution;

struct Certificate {
  bool counts_match = false;
  bool pairwise_disjoint = false;
  bool coverage_ok = false;
  std::vector<VisibilityInterval> witness_intervals;

  bool valid() const { return counts_match && pairwise_disjoint && coverage_ok; }
};

/// Exact optimality certificate: |W| = |G|, pairwise-disjoint witness
/// visibility intervals, full coverage. Disjoint witnesses lower-bound every
/// guard set, so a valid certificate proves |G| optimal.
Certificate certify(const Solution& solution, const Terrain& terrain,
                    const AltitudeLine& altitude);

/// Right-to-left realization pass: shrinks eps-left realizations until each
/// witness's interval ends at or before its guard, or failing that, strictly
/// before the next witness's interval (also under one further halving).
/// Deterministic; runs once at the end of solve().
void refine_witness_realizations(std::vector<Witness>& witnesses,
                                 const std::vector<Rational>& guards, const MarkSet& marks,
                                 const Terrain& terrain, const AltitudeLine& altitude);

}  // namespace atgp
