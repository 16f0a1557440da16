#include <doctest.h>

#include "atgp/generator.hpp"
#include "atgp/instance_io.hpp"
#include "atgp/oracle.hpp"
#include "atgp/solver.hpp"
#include "fixtures.hpp"

using namespace atgp;

TEST_CASE("generated instances are valid and have the requested size") {
  for (auto profile : {TerrainProfile::kPeaks, TerrainProfile::kPlateau,
                       TerrainProfile::kSawtooth, TerrainProfile::kRandomWalk}) {
    Instance inst = generate(5, 1, profile);
    CHECK(inst.terrain.vertex_count() == 5);
    CHECK_NOTHROW(validate_instance(inst, AltitudeMode::kStrict));
    for (std::size_t i = 1; i + 1 < inst.terrain.vertex_count(); ++i) {
      CHECK(orientation(inst.terrain.vertex(i - 1), inst.terrain.vertex(i),
                        inst.terrain.vertex(i + 1)) != Orientation::kCollinear);
    }
  }
  CHECK_THROWS_AS(generate(1, 1, TerrainProfile::kPeaks), InvalidInstance);
  CHECK_THROWS_AS(generate(5, 1, TerrainProfile::kPeaks, Rational(0)), InvalidInstance);
}

TEST_CASE("n = 2 yields a single-edge instance solved by one guard") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Instance inst = generate(2, seed, TerrainProfile::kRandomWalk);
    CHECK(inst.terrain.vertex_count() == 2);
    CHECK(solve(inst.terrain, inst.altitude).guards.size() == 1);
  }
}

TEST_CASE("generation is deterministic per seed") {
  for (auto profile : {TerrainProfile::kPeaks, TerrainProfile::kRandomWalk}) {
    std::string a = serialize_instance(generate(30, 7, profile));
    std::string b = serialize_instance(generate(30, 7, profile));
    std::string c = serialize_instance(generate(30, 8, profile));
    CHECK(a == b);
    CHECK(a != c);
  }
}

TEST_CASE("the full pipeline holds on a larger sawtooth instance") {
  Instance inst = generate(200, 7, TerrainProfile::kSawtooth);
  Solution s = solve(inst.terrain, inst.altitude);
  CHECK(certify(s, inst.terrain, inst.altitude).valid());
}

TEST_CASE("profile names round-trip") {
  for (auto p : {TerrainProfile::kPeaks, TerrainProfile::kPlateau, TerrainProfile::kSawtooth,
                 TerrainProfile::kRandomWalk}) {
    CHECK(profile_from_string(to_string(p)) == p);
  }
  CHECK_FALSE(profile_from_string("mesa"));
}
