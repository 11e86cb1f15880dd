#include "flipcut/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace flipcut {
namespace io {

using nlohmann::json;

PointSet read_point_set(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    long long x = 0, y = 0;
    if (!(ss >> x >> y))
      fail(Errc::parse_error, "line " + std::to_string(lineno) + ": expected \"x y\"");
    std::string rest;
    if (ss >> rest) fail(Errc::parse_error, "line " + std::to_string(lineno) + ": trailing tokens");
    pts.push_back(Point{x, y});
  }
  return PointSet(std::move(pts));
}

void write_point_set(std::ostream& out, const PointSet& ps,
                     const std::vector<std::string>& comments) {
  for (const std::string& c : comments) out << "# " << c << "\n";
  for (const Point& p : ps.points()) out << p.x << " " << p.y << "\n";
}

std::vector<Edge> edges_from_json(const json& j) {
  const json& list = j.is_object() ? j.at("edges") : j;
  std::vector<Edge> out;
  for (const json& pair : list) {
    if (!pair.is_array() || pair.size() != 2) fail(Errc::parse_error, "edge entries must be [i, j]");
    out.push_back(Edge(pair[0].get<int>(), pair[1].get<int>()));
  }
  return out;
}

std::vector<Edge> read_edge_list(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Errc::parse_error, "malformed JSON edge list");
    return edges_from_json(j);
  }
  std::vector<Edge> out;
  std::istringstream stream(text);
  std::string line;
  long lineno = 0;
  while (std::getline(stream, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ss(line);
    int i = 0, j = 0;
    if (!(ss >> i >> j))
      fail(Errc::parse_error, "line " + std::to_string(lineno) + ": expected \"i j\"");
    out.push_back(Edge(i, j));
  }
  return out;
}

void write_edge_list(std::ostream& out, const std::vector<Edge>& edges) {
  for (const Edge& e : edges) out << e.i << " " << e.j << "\n";
}

json edges_json(const std::vector<Edge>& edges) {
  json arr = json::array();
  for (const Edge& e : edges) arr.push_back(json::array({e.i, e.j}));
  return arr;
}

json report_json(const FlipCutReport& report) {
  json comps = json::array();
  for (const ComponentSides& c : report.components)
    comps.push_back(json{{"A", c.above}, {"B", c.below}});
  return json{{"edge", json::array({report.orders.u, report.orders.v})},
              {"flip_cut", report.flip_cut},
              {"component_count", report.component_count},
              {"components", comps}};
}

json path_json(const convex::FlipPath& path) {
  json moves = json::array();
  for (const FlipMove& m : path.moves)
    moves.push_back(json{{"remove", json::array({m.removed.i, m.removed.j})},
                         {"add", json::array({m.added.i, m.added.j})}});
  return json{{"start", edges_json(path.start)}, {"moves", moves}};
}

json cut_set_json(const convex::CutSet& cut) {
  return json{{"n", cut.n},
              {"T", edges_json(cut.frozen)},
              {"X", edges_json(cut.forbidden)},
              {"T2", edges_json(cut.witness)}};
}

json error_json(const Error& err) {
  return json{{"error", errc_name(err.code())}, {"message", err.what()}};
}

}  // namespace io
}  // namespace flipcut
