#pragma once

#include <cstdint>
#include <vector>

#include "flipcut/geometry.hpp"

namespace flipcut {
namespace gen {

/// All points (x, y) with 0 <= x < k, 0 <= y < l in row-major order, so the
/// point (x, y) has index y*k + x.
PointSet grid(int k, int l);

/// Two opposing reflex chains. Every segment between interior points of the
/// two chains is a flip cut edge.
struct Channel {
  PointSet points;
  std::vector<int> top;     // indices of the upper chain, left to right
  std::vector<int> bottom;  // indices of the lower chain, left to right
};

Channel channel(int n);

/// Antipodal arc pairs around a tiny central edge uv; forbidding uv splits
/// the flip graph into one component per pair.
struct Hourglass {
  PointSet points;
  std::vector<int> upper;  // a_1..a_n along the top arc
  std::vector<int> lower;  // the diametrically opposite points
  int u = 0;
  int v = 0;
};

Hourglass hourglass(int n);

/// n strictly convex points (i, i^2); cyclic hull order equals index order.
PointSet convex(int n);

/// n distinct points uniform over [0, bound]^2, reproducible from the seed.
/// With allow_collinear false, resamples until no three points are collinear.
PointSet random_points(int n, Coord bound, std::uint64_t seed, bool allow_collinear);

}  // namespace gen
}  // namespace flipcut
