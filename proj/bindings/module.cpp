#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flipcut/convex.hpp"
#include "flipcut/flipcut.hpp"
#include "flipcut/generators.hpp"
#include "flipcut/oracle.hpp"
#include "flipcut/svg.hpp"

namespace py = pybind11;
using namespace flipcut;

namespace {

using PyEdge = std::pair<int, int>;
using PyMove = std::pair<PyEdge, PyEdge>;

Edge to_edge(const PyEdge& e) { return Edge(e.first, e.second); }

PyEdge from_edge(const Edge& e) { return {e.i, e.j}; }

std::vector<Edge> to_edges(const std::vector<PyEdge>& list) {
  std::vector<Edge> out;
  out.reserve(list.size());
  for (const PyEdge& e : list) out.push_back(to_edge(e));
  return out;
}

std::vector<PyEdge> from_edges(const std::vector<Edge>& list) {
  std::vector<PyEdge> out;
  out.reserve(list.size());
  for (const Edge& e : list) out.push_back(from_edge(e));
  return out;
}

PointSet make_point_set(const std::vector<std::pair<Coord, Coord>>& pts) {
  std::vector<Point> points;
  points.reserve(pts.size());
  for (auto [x, y] : pts) points.push_back(Point{x, y});
  return PointSet(std::move(points));
}

std::vector<PyMove> from_moves(const std::vector<FlipMove>& moves) {
  std::vector<PyMove> out;
  for (const FlipMove& m : moves) out.push_back({from_edge(m.removed), from_edge(m.added)});
  return out;
}

}  // namespace

PYBIND11_MODULE(_flipcut, m) {
  m.doc() = "flip cut edges of planar point sets";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError,
                      (std::string(errc_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<PointSet>(m, "PointSet")
      .def(py::init(&make_point_set), py::arg("points"))
      .def("__len__", &PointSet::size)
      .def("point",
           [](const PointSet& ps, int i) {
             require_index(ps, i);
             return std::pair<Coord, Coord>{ps[i].x, ps[i].y};
           })
      .def("points", [](const PointSet& ps) {
        std::vector<std::pair<Coord, Coord>> out;
        for (const Point& p : ps.points()) out.push_back({p.x, p.y});
        return out;
      });

  py::class_<Triangulation>(m, "Triangulation")
      .def("edges", [](const Triangulation& t) { return from_edges(t.edges()); })
      .def("triangles",
           [](const Triangulation& t) {
             std::vector<std::tuple<int, int, int>> out;
             for (const Triangle& tri : t.triangles()) out.push_back({tri.a, tri.b, tri.c});
             return out;
           })
      .def("contains", [](const Triangulation& t, const PyEdge& e) { return t.contains(to_edge(e)); })
      .def("__eq__", [](const Triangulation& a, const Triangulation& b) { return a == b; });

  m.def("orient", [](std::pair<Coord, Coord> p, std::pair<Coord, Coord> q,
                     std::pair<Coord, Coord> r) {
    return orient(Point{p.first, p.second}, Point{q.first, q.second}, Point{r.first, r.second});
  });
  m.def("is_edge", [](const PointSet& ps, int i, int j) { return is_edge(ps, i, j); });
  m.def("empty_convex_polygon", [](const PointSet& ps, const std::vector<int>& v) {
    return empty_convex_polygon(ps, v);
  });
  m.def("crossing_edges",
        [](const PointSet& ps, const PyEdge& e) { return from_edges(crossing_edges(ps, to_edge(e))); });
  m.def("ec4_diagonals",
        [](const PointSet& ps, const PyEdge& e) { return from_edges(ec4_diagonals(ps, to_edge(e))); });
  m.def("all_valid_edges", [](const PointSet& ps) { return from_edges(all_valid_edges(ps)); });

  m.def("apex_orders", [](const PointSet& ps, const PyEdge& e) {
    ApexOrders o = apex_orders(ps, to_edge(e));
    return py::dict(py::arg("u") = o.u, py::arg("v") = o.v, py::arg("above") = o.above,
                    py::arg("below") = o.below);
  });
  m.def("is_flip_cut_edge", [](const PointSet& ps, const PyEdge& e) {
    FlipCutReport r = is_flip_cut_edge(ps, to_edge(e));
    std::vector<std::pair<std::vector<int>, std::vector<int>>> comps;
    for (const ComponentSides& c : r.components) comps.push_back({c.above, c.below});
    return py::dict(py::arg("flip_cut") = r.flip_cut,
                    py::arg("component_count") = r.component_count,
                    py::arg("components") = comps);
  });
  m.def(
      "all_flip_cut_edges",
      [](const PointSet& ps, int threads) { return from_edges(all_flip_cut_edges(ps, threads)); },
      py::arg("points"), py::arg("threads") = 1);

  m.def("validate_triangulation", [](const PointSet& ps, const std::vector<PyEdge>& edges) {
    return validate(ps, to_edges(edges));
  });
  m.def("constrained_triangulation", [](const PointSet& ps, const std::vector<PyEdge>& forced) {
    return constrained_triangulation(ps, to_edges(forced));
  });
  m.def(
      "enumerate_triangulations",
      [](const PointSet& ps, int bound) { return enumerate_triangulations(ps, bound); },
      py::arg("points"), py::arg("bound") = kDefaultEnumerationBound);
  m.def("flippable", [](const PointSet& ps, const Triangulation& t, const PyEdge& f)
            -> std::optional<PyEdge> {
    std::optional<Edge> g = flippable(ps, t, to_edge(f));
    if (!g) return std::nullopt;
    return from_edge(*g);
  });
  m.def("apply_flip",
        [](const PointSet& ps, const Triangulation& t, const PyEdge& removed, const PyEdge& added) {
          return apply_flip(ps, t, FlipMove{to_edge(removed), to_edge(added)});
        });
  m.def("corridor", [](const PointSet& ps, const Triangulation& t, const PyEdge& e) {
    std::vector<std::tuple<int, int, int>> out;
    for (const Triangle& tri : corridor(ps, t, to_edge(e))) out.push_back({tri.a, tri.b, tri.c});
    return out;
  });
  m.def("representative_diagonal", [](const PointSet& ps, const Triangulation& t, const PyEdge& e) {
    return from_edge(representative_diagonal(ps, t, to_edge(e)));
  });
  m.def("same_component", [](const PointSet& ps, const PyEdge& e, const Triangulation& t1,
                             const Triangulation& t2) {
    return same_component(ps, to_edge(e), t1, t2);
  });

  m.def(
      "bf_is_flip_cut",
      [](const PointSet& ps, const std::vector<PyEdge>& x, int bound) {
        oracle::BfFlipCutReport r = oracle::bf_is_flip_cut(ps, to_edges(x), bound);
        return py::dict(py::arg("flip_cut") = r.flip_cut,
                        py::arg("component_count") = r.component_count,
                        py::arg("node_count") = r.node_count);
      },
      py::arg("points"), py::arg("forbidden"), py::arg("bound") = kDefaultEnumerationBound);
  m.def(
      "bf_line_graph_components",
      [](const PointSet& ps, const PyEdge& e, const std::string& universe) {
        oracle::LineGraphUniverse u = universe == "crossing"
                                          ? oracle::LineGraphUniverse::crossing
                                          : oracle::LineGraphUniverse::ec4_diagonal;
        std::vector<std::vector<PyEdge>> out;
        for (const auto& comp : oracle::bf_line_graph_components(ps, to_edge(e), u))
          out.push_back(from_edges(comp));
        return out;
      },
      py::arg("points"), py::arg("edge"), py::arg("universe") = "ec4_diagonal");
  m.def("ec5_criterion", [](const PointSet& ps, const PyEdge& e) {
    oracle::Ec5Criterion c = oracle::ec5_criterion(ps, to_edge(e));
    return py::dict(py::arg("applicable") = c.applicable, py::arg("flip_cut") = c.flip_cut);
  });
  m.def("grid_ec4_diagonals", [](int k, int l, const PyEdge& e) {
    return from_edges(oracle::grid_ec4_diagonals(k, l, to_edge(e)));
  });

  m.def("gen_grid", &gen::grid, py::arg("k"), py::arg("l"));
  m.def("gen_channel", [](int n) {
    gen::Channel c = gen::channel(n);
    return py::make_tuple(std::move(c.points),
                          py::dict(py::arg("top") = c.top, py::arg("bottom") = c.bottom));
  });
  m.def("gen_hourglass", [](int n) {
    gen::Hourglass h = gen::hourglass(n);
    return py::make_tuple(std::move(h.points),
                          py::dict(py::arg("upper") = h.upper, py::arg("lower") = h.lower,
                                   py::arg("u") = h.u, py::arg("v") = h.v));
  });
  m.def("gen_convex", &gen::convex, py::arg("n"));
  m.def("gen_random", &gen::random_points, py::arg("n"), py::arg("bound"), py::arg("seed"),
        py::arg("allow_collinear") = true);

  m.def("zigzag_cut_set", [](int n) {
    convex::CutSet cut = convex::zigzag_cut_set(n);
    return py::dict(py::arg("n") = cut.n, py::arg("T") = from_edges(cut.frozen),
                    py::arg("X") = from_edges(cut.forbidden),
                    py::arg("T2") = from_edges(cut.witness));
  });
  m.def("flip_to_star",
        [](int n, const std::vector<PyEdge>& t, int center, const std::vector<PyEdge>& x) {
          return from_moves(convex::flip_to_star(n, to_edges(t), center, to_edges(x)).moves);
        });
  m.def("avoiding_triangulation", [](int n, const std::vector<PyEdge>& x) {
    return from_edges(convex::avoiding_triangulation(n, to_edges(x)));
  });
  m.def("connect_avoiding", [](int n, const std::vector<PyEdge>& x, const std::vector<PyEdge>& s,
                               const std::vector<PyEdge>& t) {
    convex::FlipPath path = convex::connect_avoiding(n, to_edges(x), to_edges(s), to_edges(t));
    return py::dict(py::arg("start") = from_edges(path.start),
                    py::arg("moves") = from_moves(path.moves));
  });

  m.def(
      "render_svg",
      [](const PointSet& ps, const std::vector<PyEdge>& edges,
         const std::vector<PyEdge>& highlighted) {
        svg::RenderOptions options;
        options.edges = to_edges(edges);
        options.highlighted = to_edges(highlighted);
        return svg::render(ps, options);
      },
      py::arg("points"), py::arg("edges") = std::vector<PyEdge>{},
      py::arg("highlighted") = std::vector<PyEdge>{});
}
