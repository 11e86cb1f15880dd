#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "flipcut/geometry.hpp"

namespace flipcut {

/// Index triple with a < b < c.
struct Triangle {
  int a;
  int b;
  int c;

  friend bool operator==(const Triangle&, const Triangle&) = default;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;

  bool has_vertex(int v) const { return a == v || b == v || c == v; }
  bool has_edge(Edge e) const {
    return (a == e.i || b == e.i || c == e.i) && (a == e.j || b == e.j || c == e.j);
  }
};

Triangle make_triangle(int x, int y, int z);

/// Maximal set of pairwise non-crossing edges over a fixed point set, stored
/// canonically as a sorted edge list plus the derived triangle faces.
/// Equality and hashing are over the edge set.
class Triangulation {
 public:
  Triangulation() = default;
  Triangulation(std::vector<Edge> edges, std::vector<Triangle> triangles)
      : edges_(std::move(edges)), triangles_(std::move(triangles)) {}

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  bool contains(Edge e) const;

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;
};

struct TriangulationHash {
  size_t operator()(const Triangulation& t) const noexcept;
};

struct FlipMove {
  Edge removed;
  Edge added;

  friend bool operator==(const FlipMove&, const FlipMove&) = default;
};

/// Checks that the edge set is a triangulation (valid edges, pairwise
/// non-crossing, maximal) and derives the triangle faces.
Triangulation validate(const PointSet& ps, std::vector<Edge> edges);

/// Derives faces for an edge set already known to be a triangulation.
Triangulation make_triangulation_unchecked(const PointSet& ps, std::vector<Edge> edges);

/// If f separates two faces whose four corners form an empty convex
/// quadrilateral, returns the opposite diagonal; otherwise nothing.
std::optional<Edge> flippable(const PointSet& ps, const Triangulation& t, Edge f);

Triangulation apply_flip(const PointSet& ps, const Triangulation& t, const FlipMove& move);

/// Completes the given non-crossing edges to a maximal set. Candidates are
/// inserted in (squared length, index pair) order so results are reproducible.
Triangulation constrained_triangulation(const PointSet& ps, std::vector<Edge> forced);

/// The faces of t whose interiors meet segment e, walked from the e.i side to
/// the e.j side. Consecutive faces share an edge crossing e.
std::vector<Triangle> corridor(const PointSet& ps, const Triangulation& t, Edge e);

inline constexpr int kDefaultEnumerationBound = 12;

/// All triangulations of the point set, each exactly once, in a fixed
/// backtracking order. Guarded by the size bound.
std::vector<Triangulation> enumerate_triangulations(const PointSet& ps,
                                                    int bound = kDefaultEnumerationBound);

/// Streaming variant; the callback must be externally synchronized if shared.
void enumerate_triangulations(const PointSet& ps,
                              const std::function<void(const Triangulation&)>& emit,
                              int bound = kDefaultEnumerationBound);

}  // namespace flipcut
