#pragma once

#include <vector>

#include "flipcut/flipcut.hpp"
#include "flipcut/triangulation.hpp"

namespace flipcut {
namespace oracle {

/// Enumeration bound for all brute-force operations; the FLIPCUT_ENUM_BOUND
/// environment variable overrides the default.
int enumeration_bound();

/// Exhaustive flip graph over the triangulations avoiding every edge of x.
struct FlipGraph {
  std::vector<Triangulation> nodes;
  std::vector<std::vector<int>> adjacency;
  std::vector<Edge> forbidden;
};

FlipGraph bf_flip_graph(const PointSet& ps, const std::vector<Edge>& x);
FlipGraph bf_flip_graph(const PointSet& ps, const std::vector<Edge>& x, int bound);

struct BfFlipCutReport {
  bool flip_cut = false;
  int component_count = 0;       // 0 when no triangulation avoids x
  int node_count = 0;
  std::vector<int> component_of;  // node index -> component id (BFS order)
};

BfFlipCutReport bf_is_flip_cut(const PointSet& ps, const std::vector<Edge>& x);
BfFlipCutReport bf_is_flip_cut(const PointSet& ps, const std::vector<Edge>& x, int bound);

int component_count(const FlipGraph& g);
std::vector<int> component_labels(const FlipGraph& g);

enum class LineGraphUniverse {
  crossing,      // all edges crossing e
  ec4_diagonal,  // edges exchangeable with e by a flip
};

/// Connected components of the line graph over the chosen edge universe
/// (adjacency = shared endpoint). Components and members sorted.
std::vector<std::vector<Edge>> bf_line_graph_components(const PointSet& ps, Edge e,
                                                        LineGraphUniverse universe);

struct Ec5Criterion {
  bool applicable = false;  // e is not a diagonal of any empty convex pentagon
  bool flip_cut = false;    // meaningful only when applicable
};

/// Shortcut test: for edges that are not diagonals of any empty convex
/// pentagon, flip-cut-ness reduces to having at least two EC4 diagonals.
Ec5Criterion ec5_criterion(const PointSet& ps, Edge e);

bool has_ec5_diagonal(const PointSet& ps, Edge e);

/// Grid-specific EC4 diagonals of an edge of the k x l integer grid (indices
/// in row-major gen_grid order), computed from the two lattice lines directly
/// next to the line through e rather than from emptiness tests.
std::vector<Edge> grid_ec4_diagonals(int k, int l, Edge e);

}  // namespace oracle
}  // namespace flipcut
