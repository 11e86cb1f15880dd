#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "flipcut/flipcut.hpp"
#include "flipcut/generators.hpp"
#include "flipcut/oracle.hpp"

using namespace flipcut;

namespace {

int gi(int x, int y) { return y * 3 + x; }

// Brute-force apex sets: points forming an empty triangle with the edge.
std::set<int> brute_apexes(const PointSet& ps, Edge e, int side) {
  std::set<int> out;
  for (int p = 0; p < ps.size(); ++p) {
    if (p == e.i || p == e.j) continue;
    if (orient(ps[e.i], ps[e.j], ps[p]) != side) continue;
    if (is_ec3(ps, p, e.i, e.j)) out.insert(p);
  }
  return out;
}

bool angle_not_larger(const PointSet& ps, int pivot, int base, int x, int y) {
  // convex angle x-pivot-base <= angle y-pivot-base for same-side x, y
  int s = orient(ps[pivot], ps[x], ps[y]);
  if (s == 0) return true;
  int base_side = orient(ps[pivot], ps[base], ps[x]);
  return s == base_side;
}

}  // namespace

TEST_CASE("apex orders on the grid edge") {
  PointSet g = gen::grid(3, 3);
  ApexOrders o = apex_orders(g, Edge(gi(0, 1), gi(1, 1)));
  CHECK(o.above == std::vector<int>{gi(0, 2), gi(1, 2), gi(2, 2)});
  CHECK(o.below == std::vector<int>{gi(2, 0), gi(1, 0), gi(0, 0)});
}

TEST_CASE("hull edge with everything on one side") {
  PointSet g = gen::grid(3, 3);
  ApexOrders o = apex_orders(g, Edge(gi(0, 0), gi(1, 0)));
  CHECK(o.below.empty());
  CHECK(o.above == std::vector<int>{gi(0, 1), gi(1, 1), gi(2, 1)});
}

TEST_CASE("apex sets equal the brute-force empty-triangle scan") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    PointSet ps = gen::random_points(5 + static_cast<int>(seed % 5), 15, seed, true);
    for (const Edge& e : all_valid_edges(ps)) {
      ApexOrders o = apex_orders(ps, e);
      CHECK(std::set<int>(o.above.begin(), o.above.end()) == brute_apexes(ps, e, 1));
      CHECK(std::set<int>(o.below.begin(), o.below.end()) == brute_apexes(ps, e, -1));
      // decreasing convex angle at u along `above`, at v along `below`
      for (size_t t = 1; t < o.above.size(); ++t)
        CHECK(angle_not_larger(ps, e.i, e.j, o.above[t], o.above[t - 1]));
      for (size_t t = 1; t < o.below.size(); ++t)
        CHECK(angle_not_larger(ps, e.j, e.i, o.below[t], o.below[t - 1]));
    }
  }
}

TEST_CASE("ec4 diagonals on the named fixtures") {
  PointSet g = gen::grid(3, 3);
  std::vector<Edge> z = ec4_diagonals(g, Edge(gi(0, 1), gi(1, 1)));
  std::vector<Edge> expect{Edge(gi(1, 0), gi(0, 2)), Edge(gi(0, 0), gi(1, 2))};
  std::sort(expect.begin(), expect.end());
  CHECK(z == expect);

  // parabola pentagon: both (1,3) and (1,4) pair with the chord 0-2; the
  // sliver quad 0-1-2-4 leaves point 3 strictly below its closing side
  PointSet penta = gen::convex(5);
  CHECK(ec4_diagonals(penta, Edge(0, 2)) == std::vector<Edge>{Edge(1, 3), Edge(1, 4)});
  CHECK(is_ec4(penta, 0, 1, 2, 4));

  PointSet tri({{0, 0}, {1, 0}, {0, 1}});
  CHECK(ec4_diagonals(tri, Edge(0, 1)).empty());
}

TEST_CASE("every above-below pair crossing the edge is an ec4 diagonal") {
  for (std::uint64_t seed : {3u, 12u, 27u, 44u}) {
    PointSet ps = gen::random_points(8, 12, seed, true);
    for (const Edge& e : all_valid_edges(ps)) {
      ApexOrders o = apex_orders(ps, e);
      std::vector<Edge> z = ec4_diagonals(ps, e);
      for (int a : o.above)
        for (int b : o.below)
          CHECK(segments_cross(ps[a], ps[b], ps[e.i], ps[e.j]) ==
                std::binary_search(z.begin(), z.end(), Edge(a, b)));
      std::set<int> above(o.above.begin(), o.above.end());
      std::set<int> below(o.below.begin(), o.below.end());
      for (const Edge& f : z)
        CHECK(((above.contains(f.i) && below.contains(f.j)) ||
               (above.contains(f.j) && below.contains(f.i))));
    }
  }
}

TEST_CASE("diagonal neighbourhoods are intervals and staircases") {
  for (std::uint64_t seed = 50; seed < 80; ++seed) {
    PointSet ps = gen::random_points(8, 14, seed, true);
    for (const Edge& e : all_valid_edges(ps)) {
      ApexOrders o = apex_orders(ps, e);
      const int k = static_cast<int>(o.above.size());
      const int l = static_cast<int>(o.below.size());
      std::vector<Edge> z = ec4_diagonals(ps, e);
      std::vector<std::vector<bool>> in_z(k, std::vector<bool>(l, false));
      for (int s = 0; s < k; ++s)
        for (int t = 0; t < l; ++t)
          in_z[s][t] = std::binary_search(z.begin(), z.end(), Edge(o.above[s], o.below[t]));
      for (int t = 0; t < l; ++t) {
        int first = -1, last = -1;
        for (int s = 0; s < k; ++s)
          if (in_z[s][t]) {
            if (first < 0) first = s;
            last = s;
          }
        for (int s = std::max(first, 0); s <= last; ++s) CHECK(in_z[s][t]);
      }
      for (int s1 = 0; s1 < k; ++s1)
        for (int s2 = s1; s2 < k; ++s2)
          for (int t1 = 0; t1 < l; ++t1)
            for (int t2 = t1; t2 < l; ++t2)
              if (in_z[s1][t2] && in_z[s2][t1])
                for (int s = s1; s <= s2; ++s)
                  for (int t = t1; t <= t2; ++t) CHECK(in_z[s][t]);
    }
  }
}

TEST_CASE("grid edge splits into two components") {
  PointSet g = gen::grid(3, 3);
  FlipCutReport r = is_flip_cut_edge(g, Edge(gi(0, 1), gi(1, 1)));
  CHECK(r.flip_cut);
  CHECK(r.component_count == 2);
  REQUIRE(r.components.size() == 2);
  CHECK(r.components[0].above == std::vector<int>{gi(0, 2)});
  CHECK(r.components[0].below == std::vector<int>{gi(1, 0)});
  CHECK(r.components[1].above == std::vector<int>{gi(1, 2)});
  CHECK(r.components[1].below == std::vector<int>{gi(0, 0)});
}

TEST_CASE("boundary grid edge is unavoidable") {
  PointSet g = gen::grid(3, 3);
  FlipCutReport r = is_flip_cut_edge(g, Edge(gi(0, 0), gi(1, 0)));
  CHECK_FALSE(r.flip_cut);
  CHECK(r.component_count == 0);
}

TEST_CASE("hourglass splits into one component per antipodal pair") {
  for (int n : {2, 3, 5}) {
    gen::Hourglass h = gen::hourglass(n);
    FlipCutReport r = is_flip_cut_edge(h.points, Edge(h.u, h.v));
    CHECK(r.flip_cut);
    REQUIRE(r.component_count == n);
    for (int i = 0; i < n; ++i) {
      CHECK(r.components[i].above == std::vector<int>{h.upper[i]});
      CHECK(r.components[i].below == std::vector<int>{h.lower[i]});
    }
  }
}

TEST_CASE("no convex edge is a flip cut edge") {
  PointSet p = gen::convex(8);
  for (const Edge& e : all_valid_edges(p)) CHECK_FALSE(is_flip_cut_edge(p, e).flip_cut);
}

TEST_CASE("component count matches the brute-force line graphs") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    PointSet ps = gen::random_points(7, 13, seed, true);
    for (const Edge& e : all_valid_edges(ps)) {
      FlipCutReport r = is_flip_cut_edge(ps, e);
      auto gz = oracle::bf_line_graph_components(ps, e, oracle::LineGraphUniverse::ec4_diagonal);
      auto gy = oracle::bf_line_graph_components(ps, e, oracle::LineGraphUniverse::crossing);
      CHECK(r.component_count == static_cast<int>(gz.size()));
      CHECK(gz.size() == gy.size());
      // each oracle component maps into exactly one reported component
      ComponentIndex idx = make_component_index(ps, e);
      for (const auto& comp : gz) {
        std::set<int> homes;
        for (const Edge& f : comp) {
          CHECK(idx.component_of[f.i] == idx.component_of[f.j]);
          homes.insert(idx.component_of[f.i]);
        }
        CHECK(homes.size() == 1);
        CHECK(!homes.contains(-1));
      }
    }
  }
}

TEST_CASE("all_flip_cut_edges matches the per-edge test") {
  auto check_set = [](const PointSet& ps) {
    std::vector<Edge> expect;
    for (const Edge& e : all_valid_edges(ps))
      if (is_flip_cut_edge(ps, e).flip_cut) expect.push_back(e);
    CHECK(all_flip_cut_edges(ps) == expect);
    CHECK(all_flip_cut_edges(ps, 4) == expect);
  };
  check_set(gen::grid(4, 4));
  check_set(gen::convex(9));
  check_set(gen::channel(4).points);
  for (std::uint64_t seed = 200; seed < 230; ++seed)
    check_set(gen::random_points(9, 12, seed, true));
}

TEST_CASE("channel interior pairs are all flip cut edges") {
  gen::Channel c = gen::channel(5);
  std::vector<Edge> cut = all_flip_cut_edges(c.points);
  for (int i = 1; i < 4; ++i)
    for (int j = 1; j < 4; ++j)
      CHECK(std::binary_search(cut.begin(), cut.end(), Edge(c.bottom[i], c.top[j])));
}

TEST_CASE("line-heavy point sets agree with the brute-force line graphs") {
  std::mt19937_64 rng(2024);
  int trials = 0;
  while (trials < 25) {
    std::vector<Point> pts;
    std::set<std::pair<Coord, Coord>> seen;
    int rows = 2 + static_cast<int>(rng() % 3);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < 4; ++c) {
        Point p{static_cast<Coord>(rng() % 7), static_cast<Coord>(2 * r)};
        if (seen.insert({p.x, p.y}).second) pts.push_back(p);
      }
    if (pts.size() < 4 || pts.size() > 10) continue;
    ++trials;
    PointSet ps(pts);
    std::vector<Edge> expect;
    for (const Edge& e : all_valid_edges(ps)) {
      FlipCutReport fast = is_flip_cut_edge(ps, e);
      auto gy = oracle::bf_line_graph_components(ps, e, oracle::LineGraphUniverse::crossing);
      auto gz = oracle::bf_line_graph_components(ps, e, oracle::LineGraphUniverse::ec4_diagonal);
      CHECK(fast.component_count == static_cast<int>(gz.size()));
      CHECK(gy.size() == gz.size());
      if (fast.flip_cut) expect.push_back(e);
    }
    CHECK(all_flip_cut_edges(ps) == expect);
  }
}

TEST_CASE("ten-point random set against the full flip-graph oracle") {
  PointSet ps = gen::random_points(10, 20, 1001, true);
  for (const Edge& e : all_valid_edges(ps)) {
    FlipCutReport fast = is_flip_cut_edge(ps, e);
    oracle::BfFlipCutReport slow = oracle::bf_is_flip_cut(ps, {e});
    CHECK(fast.flip_cut == slow.flip_cut);
    if (!crossing_edges(ps, e).empty()) CHECK(fast.component_count == slow.component_count);
  }
}

TEST_CASE("representative diagonal lands in the right component") {
  gen::Hourglass h = gen::hourglass(3);
  const PointSet& ps = h.points;
  Edge uv(h.u, h.v);
  Edge a2b2(h.upper[1], h.lower[1]);
  Triangulation t = constrained_triangulation(ps, {a2b2});
  CHECK(representative_diagonal(ps, t, uv) == a2b2);

  PointSet g = gen::grid(3, 3);
  Edge e(gi(0, 1), gi(1, 1));
  Edge diag(gi(1, 0), gi(0, 2));
  Triangulation gt = constrained_triangulation(g, {diag});
  Edge rep = representative_diagonal(g, gt, e);
  ComponentIndex idx = make_component_index(g, e);
  CHECK(idx.component_of[rep.i] == idx.component_of[diag.i]);
  CHECK(idx.component_of[rep.j] == idx.component_of[diag.j]);
}

TEST_CASE("same_component on the hourglass") {
  gen::Hourglass h = gen::hourglass(2);
  const PointSet& ps = h.points;
  Edge uv(h.u, h.v);
  Triangulation t1 = constrained_triangulation(ps, {Edge(h.upper[0], h.lower[0])});
  Triangulation t2 = constrained_triangulation(ps, {Edge(h.upper[1], h.lower[1])});
  CHECK(same_component(ps, uv, t1, t1));
  CHECK_FALSE(same_component(ps, uv, t1, t2));
  Triangulation with_uv = constrained_triangulation(ps, {uv});
  CHECK_THROWS_AS((void)same_component(ps, uv, with_uv, t1), Error);
}

TEST_CASE("same_component agrees with oracle BFS on small sets") {
  for (std::uint64_t seed : {7u, 21u, 33u}) {
    PointSet ps = gen::random_points(6, 9, seed, true);
    for (const Edge& e : all_valid_edges(ps)) {
      oracle::FlipGraph g = oracle::bf_flip_graph(ps, {e});
      if (g.nodes.empty()) continue;
      std::vector<int> label = oracle::component_labels(g);
      ComponentIndex idx = make_component_index(ps, e);
      for (size_t s = 0; s < g.nodes.size(); ++s)
        for (size_t t = s; t < g.nodes.size(); ++t)
          CHECK(same_component(ps, idx, g.nodes[s], g.nodes[t]) == (label[s] == label[t]));
    }
  }
}

TEST_CASE("convex chords keep every pair of triangulations connected") {
  PointSet p = gen::convex(7);
  std::vector<Triangulation> all = enumerate_triangulations(p);
  Edge chord(2, 5);
  ComponentIndex idx = make_component_index(p, chord);
  std::vector<const Triangulation*> avoid;
  for (const Triangulation& t : all)
    if (!t.contains(chord)) avoid.push_back(&t);
  for (size_t s = 1; s < avoid.size(); ++s)
    CHECK(same_component(p, idx, *avoid[0], *avoid[s]));
}
