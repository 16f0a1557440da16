#include <doctest.h>

#include "atgp/profiler.hpp"
#include "atgp/solver.hpp"
#include "atgp/svg.hpp"
#include "fixtures.hpp"

using namespace atgp;

namespace {

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("svg contains the expected glyphs") {
  auto inst = atgp::testing::t1();
  Solution s = solve(inst.terrain, inst.altitude);
  std::string svg = render_svg(inst, &s);
  CHECK(count_occurrences(svg, "class=\"guard\"") == 2);
  CHECK(count_occurrences(svg, "class=\"witness\"") == 2);
  CHECK(count_occurrences(svg, "class=\"witness-strip\"") == 2);
  CHECK(count_occurrences(svg, "class=\"terrain\"") == 1);
  CHECK(count_occurrences(svg, "class=\"altitude\"") == 1);

  auto t0 = atgp::testing::t0();
  std::string bare = render_svg(t0);
  CHECK(count_occurrences(bare, "class=\"terrain\"") == 1);
  CHECK(count_occurrences(bare, "class=\"altitude\"") == 1);
  CHECK(count_occurrences(bare, "class=\"guard\"") == 0);
}

TEST_CASE("svg event markers appear on request") {
  auto inst = atgp::testing::t1();
  RenderOptions opt;
  opt.show_events = true;
  std::string svg = render_svg(inst, nullptr, opt);
  CHECK(count_occurrences(svg, "class=\"event-close\"") == inst.terrain.edge_count());
  CHECK(count_occurrences(svg, "class=\"event-open\"") == inst.terrain.edge_count());
  CHECK(count_occurrences(svg, "class=\"event-soft\"") == inst.terrain.edge_count());
}

TEST_CASE("svg output is deterministic") {
  auto inst = atgp::testing::t1();
  Solution s = solve(inst.terrain, inst.altitude);
  CHECK(render_svg(inst, &s) == render_svg(inst, &s));
}

TEST_CASE("altitude profiler on the fixtures") {
  auto t1 = atgp::testing::t1().terrain;
  auto rows = profile_altitudes(t1, {Rational(5), Rational(100)});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].height == Rational(5));
  CHECK(rows[0].guard_count == 2);
  CHECK(rows[1].height == Rational(100));
  CHECK(rows[1].guard_count == 1);

  auto t0 = atgp::testing::t0().terrain;
  for (const auto& row : profile_altitudes(t0, {Rational(1), Rational(3), Rational(50)}))
    CHECK(row.guard_count == 1);

  auto tv = atgp::testing::tv().terrain;
  CHECK(profile_altitudes(tv, {Rational(3)})[0].guard_count == 1);

  CHECK_THROWS_AS(profile_altitudes(t1, {Rational(4)}), InvalidInstance);
  CHECK_THROWS_AS(profile_altitudes(t1, {Rational(10), Rational(2)}), InvalidInstance);
}
