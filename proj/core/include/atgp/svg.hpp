#pragma once

#include <string>

#include "atgp/solver.hpp"

namespace atgp {

struct RenderOptions {
  bool show_events = false;  // per-edge soft-open / open / close ticks on the altitude line
  int decimals = 4;
};

/// Deterministic SVG: terrain black, altitude line red, guards as points,
/// witness strips shaded. Identical inputs produce identical bytes.
std::string render_svg(const Instance& instance, const Solution* solution = nullptr,
                       const RenderOptions& options = {});

}  // namespace atgp
