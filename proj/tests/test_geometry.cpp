#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <random>

#include "flipcut/generators.hpp"
#include "flipcut/geometry.hpp"

using namespace flipcut;

namespace {

PointSet grid3() { return gen::grid(3, 3); }

int grid_index(int x, int y) { return y * 3 + x; }

// Exact rational intersection of two segments, used as an independent check
// of segments_cross on the derived fixtures.
bool rational_proper_crossing(Point a, Point b, Point c, Point d) {
  Wide den = Wide(b.x - a.x) * Wide(d.y - c.y) - Wide(b.y - a.y) * Wide(d.x - c.x);
  if (den == 0) return false;
  Wide tn = Wide(c.x - a.x) * Wide(d.y - c.y) - Wide(c.y - a.y) * Wide(d.x - c.x);
  Wide sn = Wide(c.x - a.x) * Wide(b.y - a.y) - Wide(c.y - a.y) * Wide(b.x - a.x);
  if (den < 0) {
    den = -den;
    tn = -tn;
    sn = -sn;
  }
  return 0 < tn && tn < den && 0 < sn && sn < den;
}

}  // namespace

TEST_CASE("orient on the unit triangles") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orient({0, 0}, {1, 1}, {2, 2}) == 0);
  CHECK(orient({0, 0}, {0, 1}, {1, 0}) == -1);
}

TEST_CASE("orient is antisymmetric under argument swaps") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Coord> d(-20, 20);
  for (int t = 0; t < 500; ++t) {
    Point p{d(rng), d(rng)}, q{d(rng), d(rng)}, r{d(rng), d(rng)};
    CHECK(orient(p, q, r) == -orient(q, p, r));
    CHECK(orient(p, q, r) == -orient(p, r, q));
    CHECK(orient(p, q, r) == orient(q, r, p));
  }
}

TEST_CASE("orient is exact at the coordinate limit") {
  Point a{-kCoordLimit, -kCoordLimit}, b{kCoordLimit, kCoordLimit};
  CHECK(orient(a, b, Point{kCoordLimit - 1, kCoordLimit}) == 1);
  CHECK(orient(a, b, Point{kCoordLimit, kCoordLimit - 1}) == -1);
  CHECK(orient(a, b, Point{0, 0}) == 0);
}

TEST_CASE("is_edge detects blocking points") {
  PointSet mid({{0, 0}, {2, 0}, {1, 0}});
  CHECK_FALSE(is_edge(mid, 0, 1));
  PointSet apex({{0, 0}, {2, 0}, {1, 1}});
  CHECK(is_edge(apex, 0, 1));
  CHECK_FALSE(is_edge(grid3(), grid_index(0, 0), grid_index(2, 2)));
  CHECK(is_edge(grid3(), grid_index(0, 0), grid_index(2, 1)));
}

TEST_CASE("is_edge is symmetric and validates indices") {
  PointSet ps = gen::random_points(8, 30, 11, true);
  for (int i = 0; i < ps.size(); ++i)
    for (int j = i + 1; j < ps.size(); ++j) CHECK(is_edge(ps, i, j) == is_edge(ps, j, i));
  CHECK_THROWS_AS((void)is_edge(ps, 0, 99), Error);
}

TEST_CASE("segments_cross is a proper crossing test") {
  CHECK(segments_cross({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  CHECK_FALSE(segments_cross({0, 0}, {1, 1}, {1, 1}, {2, 0}));
  // crossing point (1/2, 1), checked against the rational oracle
  CHECK(rational_proper_crossing({0, 2}, {1, 0}, {0, 1}, {1, 1}));
  CHECK(segments_cross({0, 2}, {1, 0}, {0, 1}, {1, 1}));
  // collinear overlap is not a crossing
  CHECK_FALSE(segments_cross({0, 0}, {4, 0}, {1, 0}, {5, 0}));
}

TEST_CASE("segments_cross agrees with the rational oracle") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<Coord> d(-8, 8);
  for (int t = 0; t < 3000; ++t) {
    Point a{d(rng), d(rng)}, b{d(rng), d(rng)}, c{d(rng), d(rng)}, e{d(rng), d(rng)};
    if (a == b || c == e) continue;
    CHECK(segments_cross(a, b, c, e) == rational_proper_crossing(a, b, c, e));
  }
}

TEST_CASE("empty convex polygons on the grid") {
  PointSet g = grid3();
  // area-1/2 lattice triangle, empty by an exhaustive scan
  std::array<int, 3> tri{grid_index(0, 1), grid_index(1, 1), grid_index(2, 2)};
  bool empty = true;
  for (int t = 0; t < g.size(); ++t) {
    if (t == tri[0] || t == tri[1] || t == tri[2]) continue;
    // inside or on the triangle: all orients non-negative against CCW order
    Point a = g[tri[0]], b = g[tri[1]], c = g[tri[2]];
    if (orient(a, b, c) < 0) std::swap(b, c);
    if (orient(a, b, g[t]) >= 0 && orient(b, c, g[t]) >= 0 && orient(c, a, g[t]) >= 0) empty = false;
  }
  CHECK(empty);
  CHECK(is_ec3(g, tri[0], tri[1], tri[2]));

  CHECK_FALSE(is_ec3(g, grid_index(0, 0), grid_index(2, 0), grid_index(1, 2)));
  CHECK(is_ec4(g, grid_index(0, 2), grid_index(0, 1), grid_index(1, 0), grid_index(1, 1)));
}

TEST_CASE("empty_convex_polygon rejects degenerate and ordered inputs consistently") {
  PointSet g = grid3();
  // collinear triple is never strictly convex
  CHECK_FALSE(is_ec3(g, grid_index(0, 0), grid_index(1, 0), grid_index(2, 0)));
  std::array<int, 4> quad{grid_index(0, 2), grid_index(0, 1), grid_index(1, 0), grid_index(1, 1)};
  std::array<int, 4> rotated{quad[2], quad[3], quad[0], quad[1]};
  std::array<int, 4> reversed{quad[3], quad[2], quad[1], quad[0]};
  std::array<int, 4> shuffled{quad[2], quad[0], quad[3], quad[1]};
  CHECK(empty_convex_polygon(g, quad));
  CHECK(empty_convex_polygon(g, rotated));
  CHECK(empty_convex_polygon(g, reversed));
  CHECK(empty_convex_polygon(g, shuffled));
  CHECK_THROWS_AS(empty_convex_polygon(g, std::array<int, 2>{0, 1}), Error);
}

TEST_CASE("crossing_edges on small fixtures") {
  PointSet parabola = gen::convex(4);
  std::vector<Edge> y = crossing_edges(parabola, Edge(0, 2));
  CHECK(y == std::vector<Edge>{Edge(1, 3)});

  PointSet tri({{0, 0}, {1, 0}, {0, 1}});
  CHECK(crossing_edges(tri, Edge(0, 1)).empty());

  PointSet g = grid3();
  std::vector<Edge> claim{Edge(grid_index(0, 2), grid_index(1, 0)),
                          Edge(grid_index(1, 2), grid_index(0, 0))};
  std::vector<Edge> got = crossing_edges(g, Edge(grid_index(0, 1), grid_index(1, 1)));
  for (const Edge& e : claim)
    CHECK(std::find(got.begin(), got.end(), e) != got.end());
  for (const Edge& f : got)
    CHECK(segments_cross(g[f.i], g[f.j], g[grid_index(0, 1)], g[grid_index(1, 1)]));
}

TEST_CASE("crossing_edges is symmetric") {
  PointSet ps = gen::random_points(7, 12, 3, true);
  for (const Edge& e : all_valid_edges(ps)) {
    for (const Edge& f : crossing_edges(ps, e)) {
      std::vector<Edge> back = crossing_edges(ps, f);
      CHECK(std::find(back.begin(), back.end(), e) != back.end());
    }
  }
}

TEST_CASE("two empty triangle halves over a crossing edge join into an EC4") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    PointSet ps = gen::random_points(8, 10, seed, true);
    for (const Edge& e : all_valid_edges(ps)) {
      for (int p = 0; p < ps.size(); ++p) {
        for (int q = 0; q < ps.size(); ++q) {
          if (p == e.i || p == e.j || q == e.i || q == e.j || p == q) continue;
          if (orient(ps[e.i], ps[e.j], ps[p]) <= 0) continue;
          if (orient(ps[e.i], ps[e.j], ps[q]) >= 0) continue;
          if (!segments_cross(ps[p], ps[q], ps[e.i], ps[e.j])) continue;
          if (is_ec3(ps, p, e.i, e.j) && is_ec3(ps, q, e.j, e.i))
            CHECK(is_ec4(ps, e.i, p, e.j, q));
        }
      }
    }
  }
}

TEST_CASE("point set construction rejects bad input") {
  CHECK_THROWS_AS(PointSet({{0, 0}, {0, 0}}), Error);
  CHECK_THROWS_AS(PointSet({{0, 0}, {kCoordLimit + 1, 0}}), Error);
}

TEST_CASE("hull boundary count includes collinear boundary points") {
  PointSet ps({{0, 0}, {1, 0}, {2, 0}, {1, 1}});
  CHECK(hull_boundary_count(ps) == 4);
  CHECK(hull_boundary_count(grid3()) == 8);
  PointSet line({{0, 0}, {1, 1}, {2, 2}});
  CHECK(hull_boundary_count(line) == 3);
}
