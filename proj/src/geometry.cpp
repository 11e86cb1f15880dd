#include "flipcut/geometry.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace flipcut {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_index: return "invalid_index";
    case Errc::duplicate_point: return "duplicate_point";
    case Errc::coordinate_overflow: return "coordinate_overflow";
    case Errc::not_an_edge: return "not_an_edge";
    case Errc::edge_in_triangulation: return "edge_in_triangulation";
    case Errc::not_in_triangulation: return "not_in_triangulation";
    case Errc::crossing_pair: return "crossing_pair";
    case Errc::not_maximal: return "not_maximal";
    case Errc::illegal_flip: return "illegal_flip";
    case Errc::size_bound_exceeded: return "size_bound_exceeded";
    case Errc::bad_argument: return "bad_argument";
    case Errc::parse_error: return "parse_error";
    case Errc::generation_failed: return "generation_failed";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  for (const Point& p : points_) {
    if (p.x < -kCoordLimit || p.x > kCoordLimit || p.y < -kCoordLimit || p.y > kCoordLimit)
      fail(Errc::coordinate_overflow, "coordinate exceeds 31-bit range");
  }
  std::vector<int> idx(points_.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const Point &pa = points_[a], &pb = points_[b];
    return pa.x != pb.x ? pa.x < pb.x : pa.y < pb.y;
  });
  for (size_t t = 1; t < idx.size(); ++t)
    if (points_[idx[t - 1]] == points_[idx[t]])
      fail(Errc::duplicate_point, "points must be pairwise distinct");
}

void require_index(const PointSet& ps, int i) {
  if (i < 0 || i >= ps.size()) fail(Errc::invalid_index, "point index out of range");
}

Wide cross_value(const Point& p, const Point& q, const Point& r) {
  return Wide(q.x - p.x) * Wide(r.y - p.y) - Wide(q.y - p.y) * Wide(r.x - p.x);
}

int orient(const Point& p, const Point& q, const Point& r) {
  Wide c = cross_value(p, q, r);
  return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

Wide dist2(const Point& a, const Point& b) {
  return Wide(a.x - b.x) * Wide(a.x - b.x) + Wide(a.y - b.y) * Wide(a.y - b.y);
}

bool point_on_segment(const Point& a, const Point& b, const Point& p) {
  if (orient(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool is_edge(const PointSet& ps, int i, int j) {
  require_index(ps, i);
  require_index(ps, j);
  if (i == j) fail(Errc::bad_argument, "edge endpoints must differ");
  const Point &a = ps[i], &b = ps[j];
  for (int k = 0; k < ps.size(); ++k) {
    if (k == i || k == j) continue;
    if (point_on_segment(a, b, ps[k])) return false;
  }
  return true;
}

Edge checked_edge(const PointSet& ps, int i, int j) {
  if (!is_edge(ps, i, j))
    fail(Errc::not_an_edge, "segment " + std::to_string(i) + "-" + std::to_string(j) +
                                " passes through another point");
  return Edge(i, j);
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  if (o1 * o2 >= 0) return false;
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  return o3 * o4 < 0;
}

namespace {

// Strict convex hull (corner points only) of a tiny point list, CCW.
std::vector<Point> strict_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  auto build = [&](auto begin, auto end) {
    std::vector<Point> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 &&
             orient(chain[chain.size() - 2], chain.back(), *it) <= 0)
        chain.pop_back();
      chain.push_back(*it);
    }
    return chain;
  };
  std::vector<Point> lower = build(pts.begin(), pts.end());
  std::vector<Point> upper = build(pts.rbegin(), pts.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

bool inside_or_on_hull(const std::vector<Point>& hull, const Point& p) {
  for (size_t t = 0; t < hull.size(); ++t) {
    const Point& a = hull[t];
    const Point& b = hull[(t + 1) % hull.size()];
    if (orient(a, b, p) < 0) return false;
  }
  return true;
}

}  // namespace

bool empty_convex_polygon(const PointSet& ps, std::span<const int> vertices) {
  const size_t k = vertices.size();
  if (k < 3 || k > 5) fail(Errc::bad_argument, "polygon size must be 3, 4 or 5");
  std::vector<Point> pts;
  pts.reserve(k);
  for (int v : vertices) {
    require_index(ps, v);
    pts.push_back(ps[v]);
  }
  for (size_t s = 0; s < k; ++s)
    for (size_t t = s + 1; t < k; ++t)
      if (vertices[s] == vertices[t]) fail(Errc::bad_argument, "polygon vertices must be distinct");

  std::vector<Point> hull = strict_hull(pts);
  if (hull.size() != k) return false;  // a vertex is inside, on an edge, or collinear

  for (int t = 0; t < ps.size(); ++t) {
    bool own = false;
    for (int v : vertices) own |= (v == t);
    if (own) continue;
    if (inside_or_on_hull(hull, ps[t])) return false;
  }
  return true;
}

bool is_ec3(const PointSet& ps, int a, int b, int c) {
  std::array<int, 3> v{a, b, c};
  return empty_convex_polygon(ps, v);
}

bool is_ec4(const PointSet& ps, int a, int b, int c, int d) {
  std::array<int, 4> v{a, b, c, d};
  return empty_convex_polygon(ps, v);
}

bool is_ec5(const PointSet& ps, int a, int b, int c, int d, int e) {
  std::array<int, 5> v{a, b, c, d, e};
  return empty_convex_polygon(ps, v);
}

std::vector<Edge> crossing_edges(const PointSet& ps, Edge e) {
  if (!is_edge(ps, e.i, e.j)) fail(Errc::not_an_edge, "query segment is not an edge");
  const Point &u = ps[e.i], &v = ps[e.j];
  std::vector<Edge> out;
  for (int p = 0; p < ps.size(); ++p) {
    for (int q = p + 1; q < ps.size(); ++q) {
      if (!segments_cross(ps[p], ps[q], u, v)) continue;
      if (is_edge(ps, p, q)) out.push_back(Edge(p, q));
    }
  }
  return out;
}

std::vector<Edge> all_valid_edges(const PointSet& ps) {
  std::vector<Edge> out;
  for (int i = 0; i < ps.size(); ++i)
    for (int j = i + 1; j < ps.size(); ++j)
      if (is_edge(ps, i, j)) out.push_back(Edge(i, j));
  return out;
}

int hull_boundary_count(const PointSet& ps) {
  if (ps.size() <= 2) return ps.size();
  std::vector<Point> hull = strict_hull(ps.points());
  if (hull.size() < 3) return ps.size();  // all points collinear
  int count = 0;
  for (int t = 0; t < ps.size(); ++t) {
    const Point& p = ps[t];
    for (size_t s = 0; s < hull.size(); ++s) {
      if (point_on_segment(hull[s], hull[(s + 1) % hull.size()], p)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace flipcut
