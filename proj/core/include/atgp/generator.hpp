#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "atgp/terrain.hpp"

namespace atgp {

enum class TerrainProfile { kPeaks, kPlateau, kSawtooth, kRandomWalk };

std::optional<TerrainProfile> profile_from_string(std::string_view name);
std::string_view to_string(TerrainProfile profile);

/// Deterministic per (n, seed, profile): integer-coordinate terrain, strictly
/// x-monotone, free of collinear triples, altitude strictly above. A negative
/// altitude_margin selects a seeded margin in [1, 4].
Instance generate(std::size_t n, std::uint64_t seed, TerrainProfile profile,
                  const Rational& altitude_margin = Rational(-1));

}  // namespace atgp
