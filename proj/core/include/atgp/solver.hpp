#pragma once

#include <string>

#include "atgp/witness.hpp"

namespace atgp {

enum class TraceActionKind { kRemove, kSplit };

struct TraceAction {
  std::size_t edge;
  TraceActionKind kind;
  bool triggering;  // this sub-edge's closing key equals the event x
  bool whole_before;
  Rational q_before;
  Rational q_after;      // splits only
  Rational close_after;  // splits only
};

struct TraceEvent {
  Rational x;
  std::vector<TraceAction> actions;
};

/// Ordered record of the sweep: every event with its per-edge deletions and
/// splits (untouched edges are implicit keeps). Enough to reproduce the
/// solution without re-deriving any geometry.
struct Trace {
  std::vector<TraceEvent> events;

  std::string digest() const;  // FNV-1a 64 over the canonical rendering
};

class TraceError : public std::runtime_error {
 public:
  explicit TraceError(const std::string& what) : std::runtime_error(what) {}
};

struct Solution {
  std::vector<Rational> guards;  // strictly increasing x positions on the altitude line
  std::vector<Witness> witnesses;
  Trace trace;
};

/// Left-to-right sweep along the altitude line: place a guard at every
/// earliest closing event, delete fully seen sub-edges, split partially seen
/// ones at the boundary of the guard's visibility. The output is feasible and
/// minimum; certify() produces the machine-checkable proof.
Solution solve(const Terrain& terrain, const AltitudeLine& altitude);

/// Deterministic reconstruction of a Solution from its trace, validating
/// structural consistency. Throws TraceError on corrupted traces.
Solution replay(const Trace& trace, const Terrain& terrain, const AltitudeLine& altitude);

}  // namespace atgp
