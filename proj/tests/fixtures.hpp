#pragma once

#include <random>
#include <vector>

#include "atgp/generator.hpp"
#include "atgp/terrain.hpp"

namespace atgp::testing {

// Shared fixtures. T0: flat terrain. TV: one valley. T1: two peaks, the
// running example for events, guards and witnesses.
inline Instance t0() {
  return {Terrain::from_vertices({{0, 0}, {8, 0}}), AltitudeLine{1}};
}

inline Instance tv() {
  return {Terrain::from_vertices({{0, 2}, {2, 0}, {4, 2}}), AltitudeLine{3}};
}

inline Instance t1() {
  return {Terrain::from_vertices({{0, 0}, {2, 4}, {4, 0}, {6, 4}, {8, 0}}), AltitudeLine{5}};
}

inline Point pt(long long x, long long y) { return {Rational(x), Rational(y)}; }

inline Point pt(std::string_view x, std::string_view y) {
  return {Rational::parse(x), Rational::parse(y)};
}

inline Rational rat(std::string_view s) { return Rational::parse(s); }

// Deterministic instance pool cycling through all profiles.
inline Instance random_instance(std::uint64_t seed, std::size_t n_lo = 3, std::size_t n_hi = 40) {
  std::mt19937_64 rng(seed);
  std::size_t n = n_lo + rng() % (n_hi - n_lo + 1);
  auto profile = static_cast<TerrainProfile>(rng() % 4);
  return generate(n, seed, profile);
}

}  // namespace atgp::testing
