#include "atgp/generator.hpp"

#include <random>
#include <vector>

namespace atgp {

std::optional<TerrainProfile> profile_from_string(std::string_view name) {
  if (name == "peaks") return TerrainProfile::kPeaks;
  if (name == "plateau") return TerrainProfile::kPlateau;
  if (name == "sawtooth") return TerrainProfile::kSawtooth;
  if (name == "random-walk") return TerrainProfile::kRandomWalk;
  return std::nullopt;
}

std::string_view to_string(TerrainProfile profile) {
  switch (profile) {
    case TerrainProfile::kPeaks: return "peaks";
    case TerrainProfile::kPlateau: return "plateau";
    case TerrainProfile::kSawtooth: return "sawtooth";
    case TerrainProfile::kRandomWalk: return "random-walk";
  }
  return "random-walk";
}

namespace {

// mt19937_64 output is pinned by the standard; modulo reduction keeps the
// generator deterministic across platforms (std distributions are not).
long long pick(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

Instance generate(std::size_t n, std::uint64_t seed, TerrainProfile profile,
                  const Rational& altitude_margin) {
  if (n < 2) throw InvalidInstance("generate: n must be at least 2");

  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull +
                      static_cast<std::uint64_t>(profile) * 0x100000001B3ull + n);

  std::vector<Point> pts;
  pts.reserve(n);
  long long x = 0;
  long long y = pick(rng, 0, 6);
  long long level = y;  // plateau reference level

  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      x += pick(rng, 1, 3);
      switch (profile) {
        case TerrainProfile::kPeaks:
          y = (i % 2 == 0) ? pick(rng, 0, 2) : pick(rng, 6, 14);
          break;
        case TerrainProfile::kPlateau:
          if (i % 6 == 5) level += (pick(rng, 0, 1) ? 1 : -1) * pick(rng, 4, 9);
          y = level + pick(rng, -1, 1);
          break;
        case TerrainProfile::kSawtooth:
          y += (i % 2 ? 1 : -1) * pick(rng, 1, 8);
          break;
        case TerrainProfile::kRandomWalk:
          y += (pick(rng, 0, 1) ? 1 : -1) * pick(rng, 1, 6);
          break;
      }
    }
    Point cand{Rational(x), Rational(y)};
    if (pts.size() >= 2 &&
        orientation(pts[pts.size() - 2], pts.back(), cand) == Orientation::kCollinear) {
      // For fixed neighbors and x there is exactly one collinear y.
      cand.y += Rational(1);
      ++y;
    }
    pts.push_back(cand);
  }

  Rational margin = altitude_margin;
  if (margin.sign() < 0) margin = Rational(pick(rng, 1, 4));
  if (margin.sign() <= 0) throw InvalidInstance("generate: altitude margin must be positive");

  Terrain terrain = Terrain::from_vertices(std::move(pts));
  Rational altitude_y = terrain.y_max() + margin;
  Instance inst{std::move(terrain), AltitudeLine{altitude_y}};
  validate_instance(inst, AltitudeMode::kStrict);
  return inst;
}

}  // namespace atgp
