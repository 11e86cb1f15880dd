#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "flipcut/convex.hpp"
#include "flipcut/flipcut.hpp"
#include "flipcut/oracle.hpp"

namespace flipcut {
namespace io {

/// Point-set text format: one "x y" pair per line, '#' lines ignored,
/// indices follow line order.
PointSet read_point_set(std::istream& in);
void write_point_set(std::ostream& out, const PointSet& ps,
                     const std::vector<std::string>& comments = {});

/// Triangulation formats: "i j" per line, or JSON {"edges": [[i,j], ...]}.
/// The reader sniffs JSON from a leading '{' or '['.
std::vector<Edge> read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const std::vector<Edge>& edges);

nlohmann::json edges_json(const std::vector<Edge>& edges);
std::vector<Edge> edges_from_json(const nlohmann::json& j);

nlohmann::json report_json(const FlipCutReport& report);
nlohmann::json path_json(const convex::FlipPath& path);
nlohmann::json cut_set_json(const convex::CutSet& cut);
nlohmann::json error_json(const Error& err);

}  // namespace io
}  // namespace flipcut
