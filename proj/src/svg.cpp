#include "flipcut/svg.hpp"

#include <algorithm>
#include <sstream>

namespace flipcut {
namespace svg {

std::string render(const PointSet& ps, const RenderOptions& options) {
  Coord minx = 0, maxx = 0, miny = 0, maxy = 0;
  if (ps.size() > 0) {
    minx = maxx = ps[0].x;
    miny = maxy = ps[0].y;
    for (const Point& p : ps.points()) {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
  }
  const Coord span = std::max<Coord>({maxx - minx, maxy - miny, 1});
  const Coord mx = std::max<Coord>(1, (maxx - minx + 19) / 20);
  const Coord my = std::max<Coord>(1, (maxy - miny + 19) / 20);
  const Coord r = std::max<Coord>(1, span / 80);
  const Coord w = std::max<Coord>(1, span / 160);

  // flip y so the geometry reads the usual way up
  auto fy = [&](Coord y) { return miny + maxy - y; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (minx - mx) << " "
      << (miny - my) << " " << (maxx - minx + 2 * mx) << " " << (maxy - miny + 2 * my) << "\">\n";
  out << "<style>.edge{stroke:#555;stroke-width:" << w << "}.cut{stroke:#d22;stroke-width:" << 2 * w
      << "}.pt{fill:#222}</style>\n";

  auto lines = [&](const std::vector<Edge>& edges, const char* cls) {
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    for (const Edge& e : sorted) {
      const Point &a = ps[e.i], &b = ps[e.j];
      out << "<line class=\"" << cls << "\" x1=\"" << a.x << "\" y1=\"" << fy(a.y) << "\" x2=\""
          << b.x << "\" y2=\"" << fy(b.y) << "\"/>\n";
    }
  };
  lines(options.edges, "edge");
  lines(options.highlighted, "cut");
  for (const Point& p : ps.points())
    out << "<circle class=\"pt\" cx=\"" << p.x << "\" cy=\"" << fy(p.y) << "\" r=\"" << r << "\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace svg
}  // namespace flipcut
