#include "flipcut/triangulation.hpp"

#include <algorithm>
#include <string>

namespace flipcut {

Triangle make_triangle(int x, int y, int z) {
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
  return Triangle{x, y, z};
}

bool Triangulation::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

size_t TriangulationHash::operator()(const Triangulation& t) const noexcept {
  size_t h = 1469598103934665603ull;
  for (const Edge& e : t.edges()) {
    h = (h ^ static_cast<size_t>(e.i)) * 1099511628211ull;
    h = (h ^ static_cast<size_t>(e.j)) * 1099511628211ull;
  }
  return h;
}

namespace {

std::string edge_str(Edge e) {
  return std::to_string(e.i) + "-" + std::to_string(e.j);
}

std::vector<Triangle> derive_triangles(const PointSet& ps, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(ps.size());
  for (const Edge& e : edges) {
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<Triangle> out;
  for (const Edge& e : edges) {
    const std::vector<int>& ai = adj[e.i];
    const std::vector<int>& aj = adj[e.j];
    // common neighbors k > e.j give each candidate triple once
    size_t s = 0, t = 0;
    while (s < ai.size() && t < aj.size()) {
      if (ai[s] < aj[t]) {
        ++s;
      } else if (aj[t] < ai[s]) {
        ++t;
      } else {
        int k = ai[s];
        ++s;
        ++t;
        if (k <= e.j) continue;
        const Point &pa = ps[e.i], &pb = ps[e.j], &pc = ps[k];
        int o = orient(pa, pb, pc);
        if (o == 0) fail(Errc::internal, "degenerate triangle in edge set");
        bool empty = true;
        for (int q = 0; q < ps.size() && empty; ++q) {
          if (q == e.i || q == e.j || q == k) continue;
          const Point& pq = ps[q];
          if (orient(pa, pb, pq) == o && orient(pb, pc, pq) == o && orient(pc, pa, pq) == o)
            empty = false;
        }
        if (empty) out.push_back(make_triangle(e.i, e.j, k));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> sorted_unique(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

Triangulation make_triangulation_unchecked(const PointSet& ps, std::vector<Edge> edges) {
  edges = sorted_unique(std::move(edges));
  std::vector<Triangle> tris = derive_triangles(ps, edges);
  return Triangulation(std::move(edges), std::move(tris));
}

Triangulation validate(const PointSet& ps, std::vector<Edge> edges) {
  if (ps.size() < 3) fail(Errc::bad_argument, "triangulation needs at least 3 points");
  edges = sorted_unique(std::move(edges));
  for (const Edge& e : edges)
    if (!is_edge(ps, e.i, e.j))
      fail(Errc::not_an_edge, "member " + edge_str(e) + " is not an edge of the point set");
  for (size_t s = 0; s < edges.size(); ++s)
    for (size_t t = s + 1; t < edges.size(); ++t)
      if (segments_cross(ps[edges[s].i], ps[edges[s].j], ps[edges[t].i], ps[edges[t].j]))
        fail(Errc::crossing_pair, "edges " + edge_str(edges[s]) + " and " + edge_str(edges[t]) + " cross");
  for (int i = 0; i < ps.size(); ++i) {
    for (int j = i + 1; j < ps.size(); ++j) {
      Edge cand(i, j);
      if (std::binary_search(edges.begin(), edges.end(), cand)) continue;
      if (!is_edge(ps, i, j)) continue;
      bool blocked = false;
      for (const Edge& e : edges) {
        if (segments_cross(ps[i], ps[j], ps[e.i], ps[e.j])) {
          blocked = true;
          break;
        }
      }
      if (!blocked)
        fail(Errc::not_maximal, "edge " + edge_str(cand) + " can still be added");
    }
  }
  std::vector<Triangle> tris = derive_triangles(ps, edges);
  return Triangulation(std::move(edges), std::move(tris));
}

std::optional<Edge> flippable(const PointSet& ps, const Triangulation& t, Edge f) {
  if (!t.contains(f)) fail(Errc::not_in_triangulation, "edge " + edge_str(f) + " not in triangulation");
  int apex[2];
  int found = 0;
  for (const Triangle& tri : t.triangles()) {
    if (!tri.has_edge(f)) continue;
    int other = tri.a + tri.b + tri.c - f.i - f.j;
    if (found < 2) apex[found] = other;
    ++found;
  }
  if (found != 2) return std::nullopt;  // hull edge
  if (!is_ec4(ps, f.i, f.j, apex[0], apex[1])) return std::nullopt;
  return Edge(apex[0], apex[1]);
}

Triangulation apply_flip(const PointSet& ps, const Triangulation& t, const FlipMove& move) {
  if (!t.contains(move.removed))
    fail(Errc::illegal_flip, "flip removes edge " + edge_str(move.removed) + " not in triangulation");
  std::optional<Edge> partner = flippable(ps, t, move.removed);
  if (!partner || *partner != move.added)
    fail(Errc::illegal_flip, "edge " + edge_str(move.removed) + " does not flip to " + edge_str(move.added));

  std::vector<Edge> edges = t.edges();
  edges.erase(std::lower_bound(edges.begin(), edges.end(), move.removed));
  edges.insert(std::lower_bound(edges.begin(), edges.end(), move.added), move.added);

  std::vector<Triangle> tris;
  tris.reserve(t.triangles().size());
  for (const Triangle& tri : t.triangles())
    if (!tri.has_edge(move.removed)) tris.push_back(tri);
  tris.push_back(make_triangle(move.added.i, move.added.j, move.removed.i));
  tris.push_back(make_triangle(move.added.i, move.added.j, move.removed.j));
  std::sort(tris.begin(), tris.end());
  return Triangulation(std::move(edges), std::move(tris));
}

Triangulation constrained_triangulation(const PointSet& ps, std::vector<Edge> forced) {
  if (ps.size() < 3) fail(Errc::bad_argument, "triangulation needs at least 3 points");
  forced = sorted_unique(std::move(forced));
  for (const Edge& e : forced)
    if (!is_edge(ps, e.i, e.j))
      fail(Errc::not_an_edge, "constraint " + edge_str(e) + " is not an edge of the point set");
  for (size_t s = 0; s < forced.size(); ++s)
    for (size_t t = s + 1; t < forced.size(); ++t)
      if (segments_cross(ps[forced[s].i], ps[forced[s].j], ps[forced[t].i], ps[forced[t].j]))
        fail(Errc::crossing_pair,
             "constraints " + edge_str(forced[s]) + " and " + edge_str(forced[t]) + " cross");

  std::vector<Edge> candidates = all_valid_edges(ps);
  std::sort(candidates.begin(), candidates.end(), [&](const Edge& a, const Edge& b) {
    Wide la = dist2(ps[a.i], ps[a.j]), lb = dist2(ps[b.i], ps[b.j]);
    if (la != lb) return la < lb;
    return a < b;
  });

  std::vector<Edge> chosen = forced;
  for (const Edge& c : candidates) {
    if (std::find(chosen.begin(), chosen.end(), c) != chosen.end()) continue;
    bool blocked = false;
    for (const Edge& e : chosen) {
      if (segments_cross(ps[c.i], ps[c.j], ps[e.i], ps[e.j])) {
        blocked = true;
        break;
      }
    }
    if (!blocked) chosen.push_back(c);
  }
  return make_triangulation_unchecked(ps, std::move(chosen));
}

std::vector<Triangle> corridor(const PointSet& ps, const Triangulation& t, Edge e) {
  if (!is_edge(ps, e.i, e.j)) fail(Errc::not_an_edge, "query segment is not an edge");
  if (t.contains(e)) fail(Errc::edge_in_triangulation, "corridor undefined for an edge of the triangulation");
  const Point &u = ps[e.i], &v = ps[e.j];

  // The segment leaves e.i through exactly one incident face.
  const Triangle* current = nullptr;
  Edge entry(0, 1);
  for (const Triangle& tri : t.triangles()) {
    if (!tri.has_vertex(e.i)) continue;
    int x, y;
    if (tri.a == e.i) {
      x = tri.b;
      y = tri.c;
    } else if (tri.b == e.i) {
      x = tri.a;
      y = tri.c;
    } else {
      x = tri.a;
      y = tri.b;
    }
    if (segments_cross(ps[x], ps[y], u, v)) {
      current = &tri;
      entry = Edge(x, y);
      break;
    }
  }
  if (current == nullptr) fail(Errc::internal, "no corridor start triangle found");

  // `entry` is the crossing edge through which the segment leaves `current`.
  std::vector<Triangle> out{*current};
  while (true) {
    const Triangle* next = nullptr;
    for (const Triangle& tri : t.triangles()) {
      if (tri.has_edge(entry) && !(tri == *current)) {
        next = &tri;
        break;
      }
    }
    if (next == nullptr) fail(Errc::internal, "crossing edge has no second face");
    current = next;
    out.push_back(*current);
    if (current->has_vertex(e.j)) break;
    int w = current->a + current->b + current->c - entry.i - entry.j;
    bool found = false;
    for (Edge side : {Edge(entry.i, w), Edge(entry.j, w)}) {
      if (segments_cross(ps[side.i], ps[side.j], u, v)) {
        entry = side;
        found = true;
        break;
      }
    }
    if (!found) fail(Errc::internal, "corridor walk lost the segment");
  }
  return out;
}

void enumerate_triangulations(const PointSet& ps,
                              const std::function<void(const Triangulation&)>& emit,
                              int bound) {
  if (ps.size() > bound)
    fail(Errc::size_bound_exceeded,
         "point set of size " + std::to_string(ps.size()) + " exceeds enumeration bound " +
             std::to_string(bound));
  if (ps.size() < 3) fail(Errc::bad_argument, "triangulation needs at least 3 points");

  const std::vector<Edge> edges = all_valid_edges(ps);
  const int m = static_cast<int>(edges.size());
  std::vector<std::vector<int>> crossers(m);
  for (int s = 0; s < m; ++s)
    for (int t = s + 1; t < m; ++t)
      if (segments_cross(ps[edges[s].i], ps[edges[s].j], ps[edges[t].i], ps[edges[t].j])) {
        crossers[s].push_back(t);
        crossers[t].push_back(s);
      }
  std::vector<int> last_crosser(m, -1);
  for (int s = 0; s < m; ++s)
    if (!crossers[s].empty()) last_crosser[s] = *std::max_element(crossers[s].begin(), crossers[s].end());

  std::vector<char> owed(m, 0);
  std::vector<int> crossed(m, 0);
  int owed_open = 0;
  std::vector<Edge> chosen;

  auto rec = [&](int idx, auto&& self) -> void {
    if (idx == m) {
      if (owed_open == 0) emit(make_triangulation_unchecked(ps, chosen));
      return;
    }
    if (crossed[idx] > 0) {  // forced out, justified by a chosen crosser
      self(idx + 1, self);
      return;
    }
    chosen.push_back(edges[idx]);
    int satisfied = 0;
    for (int f : crossers[idx]) {
      if (crossed[f] == 0 && owed[f]) ++satisfied;
      ++crossed[f];
    }
    owed_open -= satisfied;
    self(idx + 1, self);
    owed_open += satisfied;
    for (int f : crossers[idx]) --crossed[f];
    chosen.pop_back();

    // leaving idx out is only possible if a later edge can cross it
    if (last_crosser[idx] > idx) {
      owed[idx] = 1;
      ++owed_open;
      self(idx + 1, self);
      --owed_open;
      owed[idx] = 0;
    }
  };
  rec(0, rec);
}

std::vector<Triangulation> enumerate_triangulations(const PointSet& ps, int bound) {
  std::vector<Triangulation> out;
  enumerate_triangulations(ps, [&](const Triangulation& t) { out.push_back(t); }, bound);
  return out;
}

}  // namespace flipcut
