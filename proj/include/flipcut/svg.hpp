#pragma once

#include <string>
#include <vector>

#include "flipcut/geometry.hpp"

namespace flipcut {
namespace svg {

struct RenderOptions {
  std::vector<Edge> edges;
  std::vector<Edge> highlighted;
};

/// Deterministic SVG: same input, same bytes. Integer coordinates only; the
/// viewBox is the bounding box with a 5% margin.
std::string render(const PointSet& ps, const RenderOptions& options);

}  // namespace svg
}  // namespace flipcut
