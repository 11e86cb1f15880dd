#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "flipcut/error.hpp"

namespace flipcut {

using Coord = std::int64_t;
using Wide = __int128;

/// Coordinates are capped at 31 bits so that every determinant used by the
/// predicates fits comfortably in a 128-bit product.
inline constexpr Coord kCoordLimit = 2147483647;

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Unordered index pair, stored with i < j.
struct Edge {
  int i;
  int j;

  Edge(int a, int b) : i(a < b ? a : b), j(a < b ? b : a) {
    if (a == b) fail(Errc::bad_argument, "edge endpoints must differ");
  }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A fixed list of pairwise distinct integer points; all other structures
/// refer to points by their 0-based index in this list.
class PointSet {
 public:
  explicit PointSet(std::vector<Point> points);

  int size() const { return static_cast<int>(points_.size()); }
  const Point& operator[](int i) const { return points_[static_cast<size_t>(i)]; }
  const std::vector<Point>& points() const { return points_; }

 private:
  std::vector<Point> points_;
};

/// Sign of the cross product (q-p) x (r-p): +1 counterclockwise, 0 collinear,
/// -1 clockwise. Exact for all in-range coordinates.
int orient(const Point& p, const Point& q, const Point& r);

/// Raw value of the cross product (q-p) x (r-p).
Wide cross_value(const Point& p, const Point& q, const Point& r);

Wide dist2(const Point& a, const Point& b);

/// True if p lies on the closed segment ab.
bool point_on_segment(const Point& a, const Point& b, const Point& p);

/// True if the segment between points i and j contains no third point of the
/// set, i.e. the pair is an edge of the point set.
bool is_edge(const PointSet& ps, int i, int j);
inline bool is_edge(const PointSet& ps, Edge e) { return is_edge(ps, e.i, e.j); }

/// Builds an Edge after checking validity against the point set.
Edge checked_edge(const PointSet& ps, int i, int j);

/// Proper crossing: the open segments ab and cd intersect in exactly one
/// point. Touching at an endpoint or overlapping along a line does not count.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);

/// True if the k given points (3 <= k <= 5, any order) are in strictly convex
/// position and no other point of the set lies inside or on their hull.
bool empty_convex_polygon(const PointSet& ps, std::span<const int> vertices);

bool is_ec3(const PointSet& ps, int a, int b, int c);
bool is_ec4(const PointSet& ps, int a, int b, int c, int d);
bool is_ec5(const PointSet& ps, int a, int b, int c, int d, int e);

/// All edges of the point set that properly cross e. Quadratic scan, intended
/// for test and oracle scale.
std::vector<Edge> crossing_edges(const PointSet& ps, Edge e);

/// Every valid edge of the point set, sorted.
std::vector<Edge> all_valid_edges(const PointSet& ps);

/// Number of points on the boundary of the convex hull, counting points
/// interior to hull segments. Returns size() when all points are collinear.
int hull_boundary_count(const PointSet& ps);

void require_index(const PointSet& ps, int i);

}  // namespace flipcut
