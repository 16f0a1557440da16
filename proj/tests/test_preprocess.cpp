#include <doctest.h>

#include <random>

#include "atgp/preprocess.hpp"
#include "fixtures.hpp"

using namespace atgp;
using atgp::testing::pt;
using atgp::testing::rat;

namespace {

// Independent strong-visibility predicate: x on the altitude line sees all of
// the closed prefix [0, q] of the edge.
bool sees_prefix(const Rational& x, std::size_t edge, const Rational& q, const Instance& inst) {
  auto vis = visible_subsegment(Point{x, inst.altitude.y}, edge, inst.terrain,
                                ParamInterval{0, q});
  return vis && vis->lo == Rational(0) && vis->hi == q;
}

}  // namespace

TEST_CASE("marks on the fixtures") {
  auto [t0, a0] = atgp::testing::t0();
  MarkSet m = marks_naive(t0);
  CHECK(m.closing_count() == 0);
  CHECK(m.opening_count() == 0);

  auto [tv, av] = atgp::testing::tv();
  m = marks_naive(tv);
  REQUIRE(m.closing[0].size() == 1);  // valley endpoint of the descending edge
  CHECK(m.closing[0][0].t == Rational(1));
  CHECK(m.closing[0][0].point == pt(2, 0));
  CHECK(m.closing[0][0].stored_vertex == 1);
  CHECK(m.closing[1].empty());
  REQUIRE(m.opening[1].size() == 1);  // mirrored family
  CHECK(m.opening[1][0].t == Rational(0));
  CHECK(m.opening[1][0].point == pt(2, 0));

  auto [t1, a1] = atgp::testing::t1();
  m = marks_naive(t1);
  REQUIRE(m.closing[1].size() == 1);  // valley (4,0) on the edge into it
  CHECK(m.closing[1][0].t == Rational(1));
  CHECK(m.closing[1][0].point == pt(4, 0));
  CHECK(m.closing[1][0].stored_vertex == 2);
  CHECK(m.closing[0].empty());
  CHECK(m.closing[2].empty());
  CHECK(m.closing[3].empty());

  MarkSet h = marks_convex_hull(t1);
  CHECK(h.closing_count() <= t1.vertex_count());
  CHECK(h.opening_count() <= t1.vertex_count());
  CHECK(h.closing_count() + h.opening_count() <= 5);
}

TEST_CASE("hull marks stay within the vertex budget") {
  for (int i = 0; i < 30; ++i) {
    Instance inst = atgp::testing::random_instance(6000 + i, 80, 100);
    MarkSet m = marks_convex_hull(inst.terrain);
    CHECK(m.closing_count() <= inst.terrain.vertex_count());
    CHECK(m.opening_count() <= inst.terrain.vertex_count());
  }
}

TEST_CASE("interior hull marks: grazed pivot is visible from the mark point") {
  for (int i = 0; i < 25; ++i) {
    Instance inst = atgp::testing::random_instance(6500 + i);
    MarkSet m = marks_convex_hull(inst.terrain);
    for (const auto& list : m.closing) {
      for (const Mark& mk : list) {
        CHECK(sees(mk.point, inst.terrain.vertex(mk.stored_vertex), inst.terrain));
      }
    }
  }
}

TEST_CASE("edge events on the fixtures") {
  auto [t1, a1] = atgp::testing::t1();
  auto ev = edge_events(t1, a1, marks_convex_hull(t1));
  REQUIRE(ev.size() == 4);
  CHECK(ev[0] == EdgeEvents{0, 0, rat("5/2")});
  CHECK(ev[1] == EdgeEvents{rat("3/2"), rat("3/2"), rat("13/2")});
  CHECK(ev[2] == EdgeEvents{0, rat("3/2"), rat("13/2")});
  CHECK(ev[3] == EdgeEvents{rat("11/2"), rat("11/2"), 8});

  auto [t0, a0] = atgp::testing::t0();
  ev = edge_events(t0, a0, marks_convex_hull(t0));
  REQUIRE(ev.size() == 1);
  CHECK(ev[0] == EdgeEvents{0, 0, 8});

  auto [tv, av] = atgp::testing::tv();
  ev = edge_events(tv, av, marks_convex_hull(tv));
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == EdgeEvents{0, 0, 4});
  CHECK(ev[1] == EdgeEvents{0, 0, 4});
}

TEST_CASE("naive and hull marks induce identical events") {
  for (int i = 0; i < 40; ++i) {
    Instance inst = atgp::testing::random_instance(7000 + i);
    auto ev_naive = edge_events(inst.terrain, inst.altitude, marks_naive(inst.terrain));
    auto ev_hull = edge_events(inst.terrain, inst.altitude, marks_convex_hull(inst.terrain));
    REQUIRE(ev_naive.size() == ev_hull.size());
    for (std::size_t e = 0; e < ev_naive.size(); ++e) CHECK(ev_naive[e] == ev_hull[e]);
  }
}

TEST_CASE("events are exact extremes of the strong visibility region") {
  Rational delta = rat("1/1000");
  for (int i = 0; i < 25; ++i) {
    Instance inst = atgp::testing::random_instance(8000 + i, 3, 24);
    const Terrain& t = inst.terrain;
    auto ev = edge_events(t, inst.altitude, marks_convex_hull(t));
    for (std::size_t e = 0; e < ev.size(); ++e) {
      CHECK(ev[e].soft_open <= ev[e].open);
      CHECK(ev[e].open <= ev[e].close);
      CHECK(sees_prefix(ev[e].close, e, 1, inst));
      CHECK(sees_prefix(ev[e].open, e, 1, inst));
      if (ev[e].close + delta <= t.x_max()) CHECK_FALSE(sees_prefix(ev[e].close + delta, e, 1, inst));
      if (ev[e].open - delta >= t.x_min()) CHECK_FALSE(sees_prefix(ev[e].open - delta, e, 1, inst));
      // soft opening: leftmost point seeing the edge's right endpoint
      Point right = t.vertex(e + 1);
      CHECK(sees(Point{ev[e].soft_open, inst.altitude.y}, right, t));
      if (ev[e].soft_open - delta >= t.x_min())
        CHECK_FALSE(sees(Point{ev[e].soft_open - delta, inst.altitude.y}, right, t));
    }
  }
}

TEST_CASE("right bound table matches the per-point scan") {
  for (int i = 0; i < 25; ++i) {
    Instance inst = atgp::testing::random_instance(9000 + i);
    const Terrain& t = inst.terrain;
    std::mt19937_64 rng(100 + i);
    std::vector<std::vector<Rational>> queries(t.edge_count());
    for (auto& q : queries) {
      for (int k = 0; k < 3; ++k) q.push_back(Rational(BigInt(1 + rng() % 61), BigInt(64)));
    }
    BoundTable table = right_visibility_bounds(t, inst.altitude, queries);
    for (std::size_t v = 0; v < t.vertex_count(); ++v) {
      CHECK(table.vertex[v] == visibility_interval(t.vertex(v), t, inst.altitude).hi);
    }
    for (std::size_t e = 0; e < t.edge_count(); ++e) {
      for (std::size_t k = 0; k < queries[e].size(); ++k) {
        CHECK(table.query[e][k] ==
              visibility_interval(t.point_on_edge(e, queries[e][k]), t, inst.altitude).hi);
      }
    }
  }
}

TEST_CASE("closing_of_interval on the fixtures") {
  auto [t1, a1] = atgp::testing::t1();
  MarkSet m1 = marks_convex_hull(t1);
  // Prefix of the final descending edge, split at (7,2). The whole edge is
  // seen from the span end, so the sub-interval closes there too.
  Rational c = closing_of_interval(3, rat("1/2"), m1, t1, a1);
  CHECK(c == Rational(8));
  CHECK(sees_prefix(c, 3, rat("1/2"), {t1, a1}));

  // Prefix of the edge descending into the valley: the binding bound is the
  // boundary point's own.
  c = closing_of_interval(1, rat("1/2"), m1, t1, a1);
  CHECK(c == rat("15/2"));
  CHECK(sees_prefix(c, 1, rat("1/2"), {t1, a1}));
  CHECK_FALSE(sees_prefix(c + rat("1/1000"), 1, rat("1/2"), {t1, a1}));

  auto [t0, a0] = atgp::testing::t0();
  MarkSet m0 = marks_convex_hull(t0);
  CHECK(closing_of_interval(0, rat("1/2"), m0, t0, a0) == Rational(8));

  auto [tv, av] = atgp::testing::tv();
  MarkSet mv = marks_convex_hull(tv);
  CHECK(closing_of_interval(0, Rational(1), mv, tv, av) == Rational(4));

  CHECK_THROWS_AS(closing_of_interval(0, Rational(0), m1, t1, a1), InvalidInstance);
}

TEST_CASE("closing shortcut equals the reference when it fires") {
  std::mt19937_64 rng(41);
  std::size_t fired = 0;
  for (int i = 0; i < 120; ++i) {
    Instance inst = atgp::testing::random_instance(10000 + i);
    const Terrain& t = inst.terrain;
    MarkSet marks = marks_convex_hull(t);
    for (int k = 0; k < 6; ++k) {
      std::size_t e = rng() % t.edge_count();
      Rational q(BigInt(1 + rng() % 63), BigInt(64));
      Rational ref = closing_of_interval(e, q, marks, t, inst.altitude);
      auto fast = closing_ray_shortcut(e, q, marks, t, inst.altitude);
      if (fast) {
        ++fired;
        CHECK(*fast == ref);
      }
    }
  }
  CHECK(fired > 0);
}

TEST_CASE("closing is the exact rightmost prefix-seeing position") {
  std::mt19937_64 rng(43);
  Rational delta = rat("1/1000");
  for (int i = 0; i < 30; ++i) {
    Instance inst = atgp::testing::random_instance(11000 + i, 3, 20);
    const Terrain& t = inst.terrain;
    MarkSet marks = marks_convex_hull(t);
    for (int k = 0; k < 4; ++k) {
      std::size_t e = rng() % t.edge_count();
      Rational q(BigInt(1 + rng() % 31), BigInt(32));
      Rational c = closing_of_interval(e, q, marks, t, inst.altitude);
      CHECK(sees_prefix(c, e, q, inst));
      if (c + delta <= t.x_max()) CHECK_FALSE(sees_prefix(c + delta, e, q, inst));
    }
  }
}

TEST_CASE("subedge events are consistent with the whole-edge events") {
  for (int i = 0; i < 20; ++i) {
    Instance inst = atgp::testing::random_instance(12000 + i);
    const Terrain& t = inst.terrain;
    MarkSet marks = marks_convex_hull(t);
    auto ev = edge_events(t, inst.altitude, marks);
    for (std::size_t e = 0; e < t.edge_count(); ++e) {
      SubEdgeEvents sub = subedge_events(e, 1, marks, t, inst.altitude);
      CHECK(sub.soft_open == ev[e].soft_open);
      CHECK(sub.open == ev[e].open);
      CHECK(sub.close == ev[e].close);
      // a shorter prefix is never harder to see
      SubEdgeEvents half = subedge_events(e, rat("1/2"), marks, t, inst.altitude);
      CHECK(half.close >= ev[e].close);
      CHECK(half.open <= ev[e].open);
      CHECK(half.soft_open <= half.open);
    }
  }
}
