#pragma once

#include <vector>

#include "flipcut/triangulation.hpp"

namespace flipcut {

/// Apexes of empty triangles over a query edge uv: `above` holds the points
/// strictly left of u->v forming an empty triangle with the edge, ordered by
/// decreasing convex angle at u; `below` symmetrically for the right side,
/// ordered by decreasing convex angle at v.
struct ApexOrders {
  int u = 0;
  int v = 0;
  std::vector<int> above;
  std::vector<int> below;
};

ApexOrders apex_orders(const PointSet& ps, Edge e);

/// One connected component of the diagonal graph, given as the apex points it
/// spans on each side (ordered sublists of ApexOrders::above / ::below).
struct ComponentSides {
  std::vector<int> above;
  std::vector<int> below;
};

/// Connected components of the graph whose vertices are the edges pairing an
/// `above` apex with a `below` apex across e, adjacent when they share an
/// endpoint. Linear two-pointer sweep over the apex orders.
std::vector<ComponentSides> diagonal_components(const PointSet& ps, const ApexOrders& orders);

/// Edges f crossing e whose endpoints together with e's endpoints form an
/// empty convex quadrilateral (so f and e are exchangeable by a flip).
/// Quadratic scan for test and oracle scale.
std::vector<Edge> ec4_diagonals(const PointSet& ps, Edge e);

struct FlipCutReport {
  bool flip_cut = false;
  /// Number of connected components of the flip graph with e forbidden when
  /// some edge crosses e; 0 when e is unavoidable (present in every
  /// triangulation), which is reported as not a flip cut edge.
  int component_count = 0;
  ApexOrders orders;
  std::vector<ComponentSides> components;
};

/// O(n log n) flip cut edge test.
FlipCutReport is_flip_cut_edge(const PointSet& ps, Edge e);

/// Every valid edge whose prohibition disconnects the flip graph. Per-point
/// cyclic pre-sorts are shared across the edge tests, so each test is linear
/// after the O(n^2 log n) preprocessing. `threads` > 1 splits the edge list.
std::vector<Edge> all_flip_cut_edges(const PointSet& ps, int threads = 1);

/// A diagonal in the same crossing-graph component as every edge of t that
/// crosses e, picked from the corridor vertices nearest the line through e
/// (ties broken by smallest index).
Edge representative_diagonal(const PointSet& ps, const Triangulation& t, Edge e);

/// Preprocessing for same-component queries against a fixed forbidden edge.
struct ComponentIndex {
  Edge edge;
  ApexOrders orders;
  std::vector<ComponentSides> components;
  std::vector<int> component_of;  // point index -> component id, -1 elsewhere

  ComponentIndex() : edge(0, 1) {}
};

ComponentIndex make_component_index(const PointSet& ps, Edge e);

/// True if t1 and t2 lie in the same connected component of the flip graph
/// with index.edge forbidden. O(n) per query after preprocessing.
bool same_component(const PointSet& ps, const ComponentIndex& index, const Triangulation& t1,
                    const Triangulation& t2);

bool same_component(const PointSet& ps, Edge e, const Triangulation& t1, const Triangulation& t2);

}  // namespace flipcut
