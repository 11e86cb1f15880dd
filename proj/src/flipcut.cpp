#include "flipcut/flipcut.hpp"

#include <algorithm>
#include <thread>

namespace flipcut {

namespace {

// Discard order around the near endpoint: decreasing convex angle, ties
// (collinear with the pivot) with the farther point first.
bool discard_before(const PointSet& ps, int pivot, int x, int y) {
  int s = orient(ps[pivot], ps[x], ps[y]);
  if (s != 0) return s < 0;
  return dist2(ps[pivot], ps[x]) > dist2(ps[pivot], ps[y]);
}

// Emission order around the far endpoint: increasing convex angle, ties with
// the closer point first.
bool emit_before(const PointSet& ps, int pivot, int x, int y) {
  int s = orient(ps[pivot], ps[x], ps[y]);
  if (s != 0) return s < 0;
  return dist2(ps[pivot], ps[x]) < dist2(ps[pivot], ps[y]);
}

// Walks the emission order; a point survives unless an earlier emitted apex
// discarded everything strictly before it in the discard order.
std::vector<int> scan_apexes(const std::vector<int>& discard_order,
                             const std::vector<int>& emit_order, std::vector<int>& pos) {
  for (size_t t = 0; t < discard_order.size(); ++t) pos[discard_order[t]] = static_cast<int>(t);
  std::vector<int> out;
  int frontier = 0;
  for (int x : emit_order) {
    if (pos[x] < frontier) continue;
    out.push_back(x);
    frontier = pos[x];
  }
  for (int x : discard_order) pos[x] = -1;
  return out;
}

struct SideInputs {
  std::vector<int> discard_order;
  std::vector<int> emit_order;
};

// near = endpoint whose angles drive discarding, far = endpoint whose angles
// drive emission; the caller picks the side by the order of the endpoints.
SideInputs side_inputs_by_sort(const PointSet& ps, int near, int far,
                               const std::vector<int>& side_points) {
  SideInputs s;
  s.discard_order = side_points;
  std::sort(s.discard_order.begin(), s.discard_order.end(),
            [&](int x, int y) { return discard_before(ps, near, x, y); });
  s.emit_order = side_points;
  std::sort(s.emit_order.begin(), s.emit_order.end(),
            [&](int x, int y) { return emit_before(ps, far, x, y); });
  return s;
}

enum class Hit { left_of_u, crossing, right_of_v };

// Where segment (a above, b below) meets the line through uv, relative to the
// edge. Meeting the line exactly at u or v counts toward the outside, which
// is what the sweep's elimination argument needs.
Hit classify(const PointSet& ps, int u, int v, int a, int b) {
  if (orient(ps[a], ps[b], ps[u]) >= 0) return Hit::left_of_u;
  if (orient(ps[a], ps[b], ps[v]) <= 0) return Hit::right_of_v;
  return Hit::crossing;
}

}  // namespace

ApexOrders apex_orders(const PointSet& ps, Edge e) {
  if (!is_edge(ps, e.i, e.j)) fail(Errc::not_an_edge, "query segment is not an edge");
  const int u = e.i, v = e.j;
  std::vector<int> above, below;
  for (int p = 0; p < ps.size(); ++p) {
    if (p == u || p == v) continue;
    int s = orient(ps[u], ps[v], ps[p]);
    if (s > 0)
      above.push_back(p);
    else if (s < 0)
      below.push_back(p);
  }
  std::vector<int> pos(ps.size(), -1);
  ApexOrders out;
  out.u = u;
  out.v = v;
  SideInputs sa = side_inputs_by_sort(ps, u, v, above);
  out.above = scan_apexes(sa.discard_order, sa.emit_order, pos);
  SideInputs sb = side_inputs_by_sort(ps, v, u, below);
  out.below = scan_apexes(sb.discard_order, sb.emit_order, pos);
  return out;
}

std::vector<ComponentSides> diagonal_components(const PointSet& ps, const ApexOrders& orders) {
  const std::vector<int>& A = orders.above;
  const std::vector<int>& B = orders.below;
  const int k = static_cast<int>(A.size());
  const int l = static_cast<int>(B.size());
  std::vector<ComponentSides> comps;
  if (k == 0 || l == 0) return comps;

  auto hit = [&](int i, int j) { return classify(ps, orders.u, orders.v, A[i], B[j]); };

  int i = 0, j = 0;
  while (i < k && j < l) {
    // phase 1: find the first diagonal of the next component
    bool halted = false;
    while (true) {
      Hit h = hit(i, j);
      if (h == Hit::crossing) break;
      if (h == Hit::right_of_v) {
        if (++j >= l) {
          halted = true;
          break;
        }
      } else {
        if (++i >= k) {
          halted = true;
          break;
        }
      }
    }
    if (halted) break;

    ComponentSides comp;
    comp.above.push_back(A[i]);
    comp.below.push_back(B[j]);
    // phase 2: grow the component by alternately pivoting on the two sides
    bool progressed = true;
    while (progressed) {
      progressed = false;
      while (j + 1 < l && hit(i, j + 1) == Hit::crossing) {
        ++j;
        comp.below.push_back(B[j]);
        progressed = true;
      }
      while (i + 1 < k && hit(i + 1, j) == Hit::crossing) {
        ++i;
        comp.above.push_back(A[i]);
        progressed = true;
      }
    }
    comps.push_back(std::move(comp));
    ++i;
    ++j;
  }
  return comps;
}

std::vector<Edge> ec4_diagonals(const PointSet& ps, Edge e) {
  if (!is_edge(ps, e.i, e.j)) fail(Errc::not_an_edge, "query segment is not an edge");
  const Point &u = ps[e.i], &v = ps[e.j];
  std::vector<int> above, below;
  for (int p = 0; p < ps.size(); ++p) {
    if (p == e.i || p == e.j) continue;
    int s = orient(u, v, ps[p]);
    if (s > 0)
      above.push_back(p);
    else if (s < 0)
      below.push_back(p);
  }
  std::vector<Edge> out;
  for (int a : above)
    for (int b : below)
      if (segments_cross(ps[a], ps[b], u, v) && is_ec4(ps, e.i, a, e.j, b))
        out.push_back(Edge(a, b));
  std::sort(out.begin(), out.end());
  return out;
}

FlipCutReport is_flip_cut_edge(const PointSet& ps, Edge e) {
  FlipCutReport r;
  r.orders = apex_orders(ps, e);
  r.components = diagonal_components(ps, r.orders);
  r.component_count = static_cast<int>(r.components.size());
  r.flip_cut = r.component_count >= 2;
  return r;
}

namespace {

// Full cyclic order around a center point, counterclockwise from the positive
// x direction, collinear ties closest first.
struct Rings {
  std::vector<std::vector<int>> order;
};

int half_of(const Point& c, const Point& p) {
  if (p.y != c.y) return p.y > c.y ? 0 : 1;
  return p.x > c.x ? 0 : 1;
}

Rings build_rings(const PointSet& ps) {
  Rings r;
  r.order.resize(ps.size());
  for (int c = 0; c < ps.size(); ++c) {
    std::vector<int>& ring = r.order[c];
    ring.reserve(ps.size() - 1);
    for (int p = 0; p < ps.size(); ++p)
      if (p != c) ring.push_back(p);
    std::sort(ring.begin(), ring.end(), [&](int x, int y) {
      int hx = half_of(ps[c], ps[x]), hy = half_of(ps[c], ps[y]);
      if (hx != hy) return hx < hy;
      int s = orient(ps[c], ps[x], ps[y]);
      if (s != 0) return s > 0;
      return dist2(ps[c], ps[x]) < dist2(ps[c], ps[y]);
    });
  }
  return r;
}

// Points strictly left of direction d anchored at c, in ascending
// counterclockwise angle from d; ring ties stay closest-first.
void arc_side(const PointSet& ps, const std::vector<int>& ring, int c, const Point& anchor,
              const Point& toward, std::vector<int>& out) {
  out.clear();
  const Coord dx = toward.x - anchor.x, dy = toward.y - anchor.y;
  for (int q : ring) {
    Wide cr = Wide(dx) * Wide(ps[q].y - ps[c].y) - Wide(dy) * Wide(ps[q].x - ps[c].x);
    if (cr > 0) out.push_back(q);
  }
  if (out.size() < 2) return;
  auto before = [&](int x, int y) {
    int s = orient(ps[c], ps[x], ps[y]);
    if (s != 0) return s > 0;
    return dist2(ps[c], ps[x]) < dist2(ps[c], ps[y]);
  };
  // the ring order restricted to a half-plane is a rotation of the angular
  // order; locate the single wrap point
  for (size_t t = 0; t + 1 < out.size(); ++t) {
    if (!before(out[t], out[t + 1])) {
      std::rotate(out.begin(), out.begin() + static_cast<long>(t) + 1, out.end());
      break;
    }
  }
}

// Reversing an arc turns closest-first ties into farthest-first, which is the
// discard convention; emission wants closest-first again, so collinear runs
// are re-reversed.
void flip_collinear_runs(const PointSet& ps, int c, std::vector<int>& order) {
  size_t s = 0;
  while (s < order.size()) {
    size_t t = s + 1;
    while (t < order.size() && orient(ps[c], ps[order[t - 1]], ps[order[t]]) == 0) ++t;
    if (t - s > 1) std::reverse(order.begin() + static_cast<long>(s), order.begin() + static_cast<long>(t));
    s = t;
  }
}

struct EdgeScratch {
  std::vector<int> pos;
  std::vector<int> buf_discard;
  std::vector<int> buf_emit;
};

ApexOrders apex_orders_from_rings(const PointSet& ps, const Rings& rings, Edge e,
                                  EdgeScratch& scratch) {
  const int u = e.i, v = e.j;
  ApexOrders out;
  out.u = u;
  out.v = v;

  // Both arcs use the direction near->far: it bounds the wanted side from
  // either ring center. Reversal turns the counterclockwise arcs into the
  // discard and emission conventions.
  auto side = [&](int near, int far) {
    arc_side(ps, rings.order[near], near, ps[near], ps[far], scratch.buf_discard);
    std::reverse(scratch.buf_discard.begin(), scratch.buf_discard.end());
    arc_side(ps, rings.order[far], far, ps[near], ps[far], scratch.buf_emit);
    std::reverse(scratch.buf_emit.begin(), scratch.buf_emit.end());
    flip_collinear_runs(ps, far, scratch.buf_emit);
    return scan_apexes(scratch.buf_discard, scratch.buf_emit, scratch.pos);
  };
  out.above = side(u, v);
  out.below = side(v, u);
  return out;
}

}  // namespace

std::vector<Edge> all_flip_cut_edges(const PointSet& ps, int threads) {
  Rings rings = build_rings(ps);

  // valid edges straight from the rings: q is an edge partner of c exactly
  // when it is the closest point on its ray from c
  std::vector<Edge> edges;
  for (int c = 0; c < ps.size(); ++c) {
    const std::vector<int>& ring = rings.order[c];
    for (size_t t = 0; t < ring.size(); ++t) {
      int q = ring[t];
      if (q < c) continue;
      bool run_head = t == 0 || orient(ps[c], ps[ring[t - 1]], ps[q]) != 0 ||
                      half_of(ps[c], ps[ring[t - 1]]) != half_of(ps[c], ps[q]);
      if (run_head) edges.push_back(Edge(c, q));
    }
  }

  if (threads < 1) threads = 1;
  threads = std::min<int>(threads, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::vector<Edge>> found(static_cast<size_t>(threads));

  auto work = [&](int w) {
    EdgeScratch scratch;
    scratch.pos.assign(ps.size(), -1);
    for (size_t t = static_cast<size_t>(w); t < edges.size(); t += static_cast<size_t>(threads)) {
      ApexOrders orders = apex_orders_from_rings(ps, rings, edges[t], scratch);
      if (diagonal_components(ps, orders).size() >= 2) found[static_cast<size_t>(w)].push_back(edges[t]);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  std::vector<Edge> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

Edge representative_diagonal(const PointSet& ps, const Triangulation& t, Edge e) {
  std::vector<Triangle> path = corridor(ps, t, e);
  const Point &u = ps[e.i], &v = ps[e.j];
  int best_above = -1, best_below = -1;
  Wide above_dist = 0, below_dist = 0;
  auto consider = [&](int p) {
    Wide c = cross_value(u, v, ps[p]);
    if (c > 0) {
      if (best_above < 0 || c < above_dist || (c == above_dist && p < best_above)) {
        best_above = p;
        above_dist = c;
      }
    } else if (c < 0) {
      if (best_below < 0 || -c < below_dist || (-c == below_dist && p < best_below)) {
        best_below = p;
        below_dist = -c;
      }
    }
  };
  for (const Triangle& tri : path) {
    consider(tri.a);
    consider(tri.b);
    consider(tri.c);
  }
  if (best_above < 0 || best_below < 0) fail(Errc::internal, "corridor has no apex on one side");
  return Edge(best_above, best_below);
}

ComponentIndex make_component_index(const PointSet& ps, Edge e) {
  ComponentIndex idx;
  idx.edge = e;
  idx.orders = apex_orders(ps, e);
  idx.components = diagonal_components(ps, idx.orders);
  idx.component_of.assign(ps.size(), -1);
  for (size_t c = 0; c < idx.components.size(); ++c) {
    for (int p : idx.components[c].above) idx.component_of[p] = static_cast<int>(c);
    for (int p : idx.components[c].below) idx.component_of[p] = static_cast<int>(c);
  }
  return idx;
}

bool same_component(const PointSet& ps, const ComponentIndex& index, const Triangulation& t1,
                    const Triangulation& t2) {
  if (t1.contains(index.edge) || t2.contains(index.edge))
    fail(Errc::edge_in_triangulation, "triangulation contains the forbidden edge");
  Edge g1 = representative_diagonal(ps, t1, index.edge);
  Edge g2 = representative_diagonal(ps, t2, index.edge);
  int c1 = index.component_of[g1.i];
  int c2 = index.component_of[g2.i];
  if (c1 < 0 || c2 < 0 || c1 != index.component_of[g1.j] || c2 != index.component_of[g2.j])
    fail(Errc::internal, "representative diagonal outside the component index");
  return c1 == c2;
}

bool same_component(const PointSet& ps, Edge e, const Triangulation& t1, const Triangulation& t2) {
  return same_component(ps, make_component_index(ps, e), t1, t2);
}

}  // namespace flipcut
