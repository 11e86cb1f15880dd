#include "flipcut/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <unordered_map>

namespace flipcut {
namespace oracle {

int enumeration_bound() {
  if (const char* env = std::getenv("FLIPCUT_ENUM_BOUND")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 3 && v < 64) return static_cast<int>(v);
  }
  return kDefaultEnumerationBound;
}

FlipGraph bf_flip_graph(const PointSet& ps, const std::vector<Edge>& x) {
  return bf_flip_graph(ps, x, enumeration_bound());
}

FlipGraph bf_flip_graph(const PointSet& ps, const std::vector<Edge>& x, int bound) {
  FlipGraph g;
  g.forbidden = x;
  std::sort(g.forbidden.begin(), g.forbidden.end());

  auto avoids = [&](const Triangulation& t) {
    for (const Edge& e : g.forbidden)
      if (t.contains(e)) return false;
    return true;
  };
  enumerate_triangulations(
      ps, [&](const Triangulation& t) { if (avoids(t)) g.nodes.push_back(t); }, bound);

  std::unordered_map<Triangulation, int, TriangulationHash> index;
  index.reserve(g.nodes.size() * 2);
  for (size_t t = 0; t < g.nodes.size(); ++t) index.emplace(g.nodes[t], static_cast<int>(t));

  g.adjacency.resize(g.nodes.size());
  for (size_t t = 0; t < g.nodes.size(); ++t) {
    const Triangulation& node = g.nodes[t];
    for (const Edge& f : node.edges()) {
      std::optional<Edge> partner = flippable(ps, node, f);
      if (!partner) continue;
      if (std::binary_search(g.forbidden.begin(), g.forbidden.end(), *partner)) continue;
      Triangulation next = apply_flip(ps, node, FlipMove{f, *partner});
      auto it = index.find(next);
      if (it == index.end()) fail(Errc::internal, "flip left the enumerated set");
      if (it->second > static_cast<int>(t)) {
        g.adjacency[t].push_back(it->second);
        g.adjacency[it->second].push_back(static_cast<int>(t));
      }
    }
  }
  for (auto& a : g.adjacency) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return g;
}

std::vector<int> component_labels(const FlipGraph& g) {
  std::vector<int> label(g.nodes.size(), -1);
  int next = 0;
  for (size_t s = 0; s < g.nodes.size(); ++s) {
    if (label[s] >= 0) continue;
    std::queue<int> queue;
    queue.push(static_cast<int>(s));
    label[s] = next;
    while (!queue.empty()) {
      int t = queue.front();
      queue.pop();
      for (int w : g.adjacency[static_cast<size_t>(t)]) {
        if (label[w] < 0) {
          label[w] = next;
          queue.push(w);
        }
      }
    }
    ++next;
  }
  return label;
}

int component_count(const FlipGraph& g) {
  std::vector<int> label = component_labels(g);
  return label.empty() ? 0 : 1 + *std::max_element(label.begin(), label.end());
}

BfFlipCutReport bf_is_flip_cut(const PointSet& ps, const std::vector<Edge>& x) {
  return bf_is_flip_cut(ps, x, enumeration_bound());
}

BfFlipCutReport bf_is_flip_cut(const PointSet& ps, const std::vector<Edge>& x, int bound) {
  FlipGraph g = bf_flip_graph(ps, x, bound);
  BfFlipCutReport r;
  r.node_count = static_cast<int>(g.nodes.size());
  r.component_of = component_labels(g);
  r.component_count = r.component_of.empty()
                          ? 0
                          : 1 + *std::max_element(r.component_of.begin(), r.component_of.end());
  r.flip_cut = r.component_count >= 2;
  return r;
}

std::vector<std::vector<Edge>> bf_line_graph_components(const PointSet& ps, Edge e,
                                                        LineGraphUniverse universe) {
  std::vector<Edge> members = universe == LineGraphUniverse::crossing
                                  ? crossing_edges(ps, e)
                                  : ec4_diagonals(ps, e);
  std::sort(members.begin(), members.end());

  std::vector<int> parent(members.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  // edges meeting at a point: union everything incident to the same endpoint
  std::unordered_map<int, int> first_at;
  for (size_t t = 0; t < members.size(); ++t) {
    for (int endpoint : {members[t].i, members[t].j}) {
      auto [it, fresh] = first_at.emplace(endpoint, static_cast<int>(t));
      if (!fresh) parent[find(static_cast<int>(t))] = find(it->second);
    }
  }
  std::unordered_map<int, int> comp_id;
  std::vector<std::vector<Edge>> out;
  for (size_t t = 0; t < members.size(); ++t) {
    int root = find(static_cast<int>(t));
    auto [it, fresh] = comp_id.emplace(root, static_cast<int>(out.size()));
    if (fresh) out.emplace_back();
    out[static_cast<size_t>(it->second)].push_back(members[t]);
  }
  return out;
}

bool has_ec5_diagonal(const PointSet& ps, Edge e) {
  const int n = ps.size();
  for (int a = 0; a < n; ++a) {
    if (a == e.i || a == e.j) continue;
    for (int b = a + 1; b < n; ++b) {
      if (b == e.i || b == e.j) continue;
      for (int c = b + 1; c < n; ++c) {
        if (c == e.i || c == e.j) continue;
        if (!is_ec5(ps, e.i, e.j, a, b, c)) continue;
        // diagonal = endpoints of e not adjacent on the pentagon hull; u and
        // v are adjacent exactly when every other vertex is on one side.
        int side = 0;
        bool split = false;
        for (int w : {a, b, c}) {
          int s = orient(ps[e.i], ps[e.j], ps[w]);
          if (side == 0)
            side = s;
          else if (s != side)
            split = true;
        }
        if (split) return true;
      }
    }
  }
  return false;
}

Ec5Criterion ec5_criterion(const PointSet& ps, Edge e) {
  if (!is_edge(ps, e.i, e.j)) fail(Errc::not_an_edge, "query segment is not an edge");
  Ec5Criterion r;
  r.applicable = !has_ec5_diagonal(ps, e);
  if (r.applicable) r.flip_cut = ec4_diagonals(ps, e).size() >= 2;
  return r;
}

std::vector<Edge> grid_ec4_diagonals(int k, int l, Edge e) {
  if (k < 2 || l < 2) fail(Errc::bad_argument, "grid sides must be at least 2");
  const int n = k * l;
  if (e.i < 0 || e.j >= n) fail(Errc::invalid_index, "edge endpoint outside the grid");
  auto coord = [&](int idx) { return Point{idx % k, idx / k}; };
  const Point u = coord(e.i), v = coord(e.j);
  const Coord dx = v.x - u.x, dy = v.y - u.y;
  if (std::gcd(dx, dy) != 1) fail(Errc::not_an_edge, "segment passes through grid points");

  // Lattice points one translate above/below the line through e make empty
  // triangles with it; everything farther cannot.
  std::vector<int> above, below;
  for (int idx = 0; idx < n; ++idx) {
    Point p = coord(idx);
    Coord c = dx * (p.y - u.y) - dy * (p.x - u.x);
    if (c == 1)
      above.push_back(idx);
    else if (c == -1)
      below.push_back(idx);
  }
  std::vector<Edge> out;
  for (int a : above)
    for (int b : below)
      if (segments_cross(coord(a), coord(b), u, v)) out.push_back(Edge(a, b));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
}  // namespace flipcut
