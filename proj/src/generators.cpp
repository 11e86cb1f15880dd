#include "flipcut/generators.hpp"

#include <cmath>
#include <random>
#include <unordered_set>

#include "flipcut/flipcut.hpp"
#include "flipcut/oracle.hpp"

namespace flipcut {
namespace gen {

PointSet grid(int k, int l) {
  if (k < 2 || l < 2) fail(Errc::bad_argument, "grid sides must be at least 2");
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(k) * static_cast<size_t>(l));
  for (Coord y = 0; y < l; ++y)
    for (Coord x = 0; x < k; ++x) pts.push_back(Point{x, y});
  return PointSet(std::move(pts));
}

Channel channel(int n) {
  if (n < 3) fail(Errc::bad_argument, "channel needs at least 3 points per chain");
  // The half-gap grows with the chain bump, otherwise the quadrilaterals
  // spanning the channel swallow a neighbouring chain point.
  const Coord gap = Coord(n - 1) * Coord(n - 1) + 1;
  std::vector<Point> pts;
  Channel out{PointSet({}), {}, {}};
  for (Coord i = 1; i <= n; ++i) {
    Coord h = (2 * i - n - 1) * (2 * i - n - 1) + gap;
    pts.push_back(Point{4 * i, h});
  }
  for (Coord i = 1; i <= n; ++i) {
    Coord h = (2 * i - n - 1) * (2 * i - n - 1) + gap;
    pts.push_back(Point{4 * i, -h});
  }
  PointSet ps(std::move(pts));
  for (int i = 0; i < n; ++i) out.top.push_back(i);
  for (int i = 0; i < n; ++i) out.bottom.push_back(n + i);

  // upper chain bulges toward the gap, lower chain mirrors it
  for (int i = 1; i + 1 < n; ++i) {
    if (orient(ps[i - 1], ps[i], ps[i + 1]) <= 0)
      fail(Errc::generation_failed, "upper chain is not reflex");
    if (orient(ps[n + i - 1], ps[n + i], ps[n + i + 1]) >= 0)
      fail(Errc::generation_failed, "lower chain is not reflex");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!is_edge(ps, n + i, j))
        fail(Errc::generation_failed, "chain pair is blocked by a third point");
  if (n <= 6) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (oracle::has_ec5_diagonal(ps, Edge(j, n + i)))
          fail(Errc::generation_failed, "chain pair is a diagonal of an empty pentagon");
  }
  out.points = std::move(ps);
  return out;
}

Hourglass hourglass(int n) {
  if (n < 2) fail(Errc::bad_argument, "hourglass needs at least 2 arc points");
  const double pi = std::acos(-1.0);
  for (Coord radius = 1000000; radius <= kCoordLimit; radius *= 2) {
    std::vector<Point> pts;
    for (int i = 1; i <= n; ++i) {
      double theta = pi * static_cast<double>(n + 1 - i) / static_cast<double>(n + 1);
      pts.push_back(Point{static_cast<Coord>(std::llround(static_cast<double>(radius) * std::cos(theta))),
                          static_cast<Coord>(std::llround(static_cast<double>(radius) * std::sin(theta)))});
    }
    for (int i = 0; i < n; ++i) pts.push_back(Point{-pts[i].x, -pts[i].y});
    pts.push_back(Point{-1, 0});
    pts.push_back(Point{1, 0});

    try {
      PointSet ps(std::move(pts));
      Edge uv(2 * n, 2 * n + 1);
      std::vector<Edge> expected;
      for (int i = 0; i < n; ++i) expected.push_back(Edge(i, n + i));
      if (ec4_diagonals(ps, uv) == expected) {
        Hourglass out{std::move(ps), {}, {}, 2 * n, 2 * n + 1};
        for (int i = 0; i < n; ++i) out.upper.push_back(i);
        for (int i = 0; i < n; ++i) out.lower.push_back(n + i);
        return out;
      }
    } catch (const Error&) {
      // rounding collision at this radius; double and retry
    }
  }
  fail(Errc::generation_failed, "no radius realizes the hourglass wedges");
}

PointSet convex(int n) {
  if (n < 3) fail(Errc::bad_argument, "convex set needs at least 3 points");
  std::vector<Point> pts;
  for (Coord i = 0; i < n; ++i) pts.push_back(Point{i, i * i});
  return PointSet(std::move(pts));
}

namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t m) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % m;
}

}  // namespace

PointSet random_points(int n, Coord bound, std::uint64_t seed, bool allow_collinear) {
  if (n < 3) fail(Errc::bad_argument, "point set needs at least 3 points");
  if (bound < n) fail(Errc::bad_argument, "coordinate bound too small for n distinct points");
  if (bound > kCoordLimit) fail(Errc::coordinate_overflow, "coordinate bound exceeds 31-bit range");

  std::mt19937_64 rng(seed);
  const std::uint64_t m = static_cast<std::uint64_t>(bound) + 1;
  std::vector<Point> pts;
  std::unordered_set<std::uint64_t> seen;
  long budget = 1000 + 200L * n;
  while (static_cast<int>(pts.size()) < n) {
    if (--budget < 0) fail(Errc::generation_failed, "resampling budget exhausted");
    Point p{static_cast<Coord>(uniform_below(rng, m)), static_cast<Coord>(uniform_below(rng, m))};
    std::uint64_t key = (static_cast<std::uint64_t>(p.x) << 32) | static_cast<std::uint64_t>(p.y);
    if (seen.contains(key)) continue;
    if (!allow_collinear) {
      bool bad = false;
      for (size_t s = 0; s < pts.size() && !bad; ++s)
        for (size_t t = s + 1; t < pts.size() && !bad; ++t)
          if (orient(pts[s], pts[t], p) == 0) bad = true;
      if (bad) continue;
    }
    seen.insert(key);
    pts.push_back(p);
  }
  return PointSet(std::move(pts));
}

}  // namespace gen
}  // namespace flipcut
