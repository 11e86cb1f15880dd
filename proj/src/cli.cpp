#include "flipcut/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "flipcut/generators.hpp"
#include "flipcut/io.hpp"
#include "flipcut/svg.hpp"

namespace flipcut {
namespace cli {

using nlohmann::json;

namespace {

PointSet load_points(const std::string& path, std::istream& in) {
  if (path == "-") return io::read_point_set(in);
  std::ifstream file(path);
  if (!file) fail(Errc::parse_error, "cannot open " + path);
  return io::read_point_set(file);
}

std::vector<Edge> load_edges(const std::string& path, std::istream& in) {
  if (path == "-") return io::read_edge_list(in);
  std::ifstream file(path);
  if (!file) fail(Errc::parse_error, "cannot open " + path);
  return io::read_edge_list(file);
}

std::vector<Edge> pair_up(const std::vector<int>& flat) {
  if (flat.size() % 2 != 0) fail(Errc::bad_argument, "--forbid expects index pairs");
  std::vector<Edge> out;
  for (size_t t = 0; t + 1 < flat.size(); t += 2) out.push_back(Edge(flat[t], flat[t + 1]));
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"flip cut edges of planar point sets"};
  app.require_subcommand(1);

  std::string file, t1_path, t2_path, out_path, family;
  std::vector<int> edge_pair, forbid_flat, params;
  bool as_json = false, parallel = false, highlight = false, allow_collinear = false;
  std::uint64_t seed = 1;
  int npoly = 0;

  CLI::App* test_edge = app.add_subcommand("test-edge", "test whether one edge is a flip cut edge");
  test_edge->add_option("file", file)->required();
  test_edge->add_option("--edge", edge_pair, "endpoint indices")->expected(2)->required();
  test_edge->add_flag("--json", as_json);

  CLI::App* all_edges = app.add_subcommand("all-edges", "list every flip cut edge");
  all_edges->add_option("file", file)->required();
  all_edges->add_flag("--parallel", parallel);
  all_edges->add_flag("--json", as_json);

  CLI::App* components = app.add_subcommand("components", "apex components of the diagonal graph");
  components->add_option("file", file)->required();
  components->add_option("--edge", edge_pair)->expected(2)->required();

  CLI::App* same = app.add_subcommand("same-component", "are two triangulations flip-connected with the edge forbidden");
  same->add_option("file", file)->required();
  same->add_option("--edge", edge_pair)->expected(2)->required();
  same->add_option("--t1", t1_path)->required();
  same->add_option("--t2", t2_path)->required();

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force cross-checks (small sets)");
  oracle_cmd->require_subcommand(1);
  CLI::App* o_cut = oracle_cmd->add_subcommand("flip-cut", "connectivity with edges forbidden");
  o_cut->add_option("file", file)->required();
  o_cut->add_option("--forbid", forbid_flat, "forbidden edges as index pairs")->take_all();
  CLI::App* o_comp = oracle_cmd->add_subcommand("components", "flip graph and line graph components");
  o_comp->add_option("file", file)->required();
  o_comp->add_option("--edge", edge_pair)->expected(2)->required();
  CLI::App* o_same = oracle_cmd->add_subcommand("same-component", "BFS check for two triangulations");
  o_same->add_option("file", file)->required();
  o_same->add_option("--edge", edge_pair)->expected(2)->required();
  o_same->add_option("--t1", t1_path)->required();
  o_same->add_option("--t2", t2_path)->required();

  CLI::App* gen_cmd = app.add_subcommand("gen", "emit a named point family");
  gen_cmd->add_option("family", family, "grid | channel | hourglass | convex | random")->required();
  gen_cmd->add_option("params", params, "family sizes");
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_flag("--allow-collinear", allow_collinear);

  CLI::App* cutset = app.add_subcommand("convex-cutset", "zigzag cut set of the convex n-gon");
  cutset->add_option("n", npoly)->required();

  CLI::App* connect = app.add_subcommand("connect-convex", "flip path avoiding forbidden chords");
  connect->add_option("n", npoly)->required();
  connect->add_option("--forbid", forbid_flat)->take_all();
  connect->add_option("--from", t1_path)->required();
  connect->add_option("--to", t2_path)->required();

  CLI::App* render = app.add_subcommand("render", "draw the point set as SVG");
  render->add_option("file", file)->required();
  render->add_option("--edges", t1_path, "triangulation file to draw");
  render->add_flag("--highlight-flip-cut", highlight);
  render->add_option("-o,--output", out_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    int code = app.exit(e, msg, msg);
    (code == 0 ? out : err) << msg.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (*test_edge) {
      PointSet ps = load_points(file, in);
      FlipCutReport r = is_flip_cut_edge(ps, checked_edge(ps, edge_pair[0], edge_pair[1]));
      if (as_json)
        out << io::report_json(r).dump() << "\n";
      else
        out << "flip_cut: " << (r.flip_cut ? "true" : "false")
            << ", components: " << r.component_count << "\n";
    } else if (*all_edges) {
      PointSet ps = load_points(file, in);
      std::vector<Edge> cut = all_flip_cut_edges(ps, parallel ? 0x7fffffff : 1);
      if (as_json)
        out << json{{"count", cut.size()}, {"flip_cut_edges", io::edges_json(cut)}}.dump() << "\n";
      else
        io::write_edge_list(out, cut);
    } else if (*components) {
      PointSet ps = load_points(file, in);
      FlipCutReport r = is_flip_cut_edge(ps, checked_edge(ps, edge_pair[0], edge_pair[1]));
      out << io::report_json(r).dump() << "\n";
    } else if (*same) {
      PointSet ps = load_points(file, in);
      Edge e = checked_edge(ps, edge_pair[0], edge_pair[1]);
      Triangulation t1 = validate(ps, load_edges(t1_path, in));
      Triangulation t2 = validate(ps, load_edges(t2_path, in));
      bool connected = same_component(ps, e, t1, t2);
      out << json{{"edge", json::array({e.i, e.j})}, {"same_component", connected}}.dump() << "\n";
    } else if (*o_cut) {
      PointSet ps = load_points(file, in);
      std::vector<Edge> x = pair_up(forbid_flat);
      oracle::BfFlipCutReport r = oracle::bf_is_flip_cut(ps, x);
      out << json{{"oracle", true},
                  {"forbidden", io::edges_json(x)},
                  {"flip_cut", r.flip_cut},
                  {"component_count", r.component_count},
                  {"node_count", r.node_count}}
                 .dump()
          << "\n";
    } else if (*o_comp) {
      PointSet ps = load_points(file, in);
      Edge e = checked_edge(ps, edge_pair[0], edge_pair[1]);
      oracle::BfFlipCutReport r = oracle::bf_is_flip_cut(ps, {e});
      size_t gy = oracle::bf_line_graph_components(ps, e, oracle::LineGraphUniverse::crossing).size();
      size_t gz = oracle::bf_line_graph_components(ps, e, oracle::LineGraphUniverse::ec4_diagonal).size();
      out << json{{"oracle", true},
                  {"edge", json::array({e.i, e.j})},
                  {"flip_cut", r.flip_cut},
                  {"component_count", r.component_count},
                  {"node_count", r.node_count},
                  {"crossing_line_graph_components", gy},
                  {"diagonal_line_graph_components", gz}}
                 .dump()
          << "\n";
    } else if (*o_same) {
      PointSet ps = load_points(file, in);
      Edge e = checked_edge(ps, edge_pair[0], edge_pair[1]);
      Triangulation t1 = validate(ps, load_edges(t1_path, in));
      Triangulation t2 = validate(ps, load_edges(t2_path, in));
      if (t1.contains(e) || t2.contains(e))
        fail(Errc::edge_in_triangulation, "triangulation contains the forbidden edge");
      oracle::FlipGraph g = oracle::bf_flip_graph(ps, {e});
      std::vector<int> label = oracle::component_labels(g);
      int c1 = -1, c2 = -1;
      for (size_t t = 0; t < g.nodes.size(); ++t) {
        if (g.nodes[t] == t1) c1 = label[t];
        if (g.nodes[t] == t2) c2 = label[t];
      }
      if (c1 < 0 || c2 < 0) fail(Errc::bad_argument, "triangulation not found in the flip graph");
      out << json{{"oracle", true}, {"same_component", c1 == c2}}.dump() << "\n";
    } else if (*gen_cmd) {
      std::vector<std::string> comments;
      std::optional<PointSet> ps;
      if (family == "grid") {
        if (params.size() != 2) fail(Errc::bad_argument, "gen grid K L");
        ps = gen::grid(params[0], params[1]);
        comments.push_back("grid " + std::to_string(params[0]) + "x" + std::to_string(params[1]) +
                           ", point (x, y) has index y*" + std::to_string(params[0]) + "+x");
      } else if (family == "channel") {
        if (params.size() != 1) fail(Errc::bad_argument, "gen channel N");
        gen::Channel c = gen::channel(params[0]);
        comments.push_back("channel, top chain t[0.." + std::to_string(params[0] - 1) +
                           "] = indices 0.." + std::to_string(params[0] - 1));
        comments.push_back("bottom chain b[0.." + std::to_string(params[0] - 1) + "] = indices " +
                           std::to_string(params[0]) + ".." + std::to_string(2 * params[0] - 1));
        ps = std::move(c.points);
      } else if (family == "hourglass") {
        if (params.size() != 1) fail(Errc::bad_argument, "gen hourglass N");
        gen::Hourglass h = gen::hourglass(params[0]);
        comments.push_back("hourglass, upper arc a[0.." + std::to_string(params[0] - 1) +
                           "] = indices 0.." + std::to_string(params[0] - 1));
        comments.push_back("lower arc b[i] = index " + std::to_string(params[0]) + "+i");
        comments.push_back("u = index " + std::to_string(h.u) + ", v = index " + std::to_string(h.v));
        ps = std::move(h.points);
      } else if (family == "convex") {
        if (params.size() != 1) fail(Errc::bad_argument, "gen convex N");
        ps = gen::convex(params[0]);
        comments.push_back("convex position, cyclic order = index order");
      } else if (family == "random") {
        if (params.size() != 2) fail(Errc::bad_argument, "gen random N BOUND");
        ps = gen::random_points(params[0], params[1], seed, allow_collinear);
        comments.push_back("random, seed " + std::to_string(seed));
      } else {
        fail(Errc::bad_argument, "unknown family " + family);
      }
      io::write_point_set(out, *ps, comments);
    } else if (*cutset) {
      out << io::cut_set_json(convex::zigzag_cut_set(npoly)).dump() << "\n";
    } else if (*connect) {
      convex::ChordSet x(pair_up(forbid_flat));
      convex::ChordSet from = load_edges(t1_path, in);
      convex::ChordSet to = load_edges(t2_path, in);
      convex::FlipPath path = convex::connect_avoiding(npoly, x, from, to);
      out << io::path_json(path).dump() << "\n";
    } else if (*render) {
      PointSet ps = load_points(file, in);
      svg::RenderOptions options;
      if (!t1_path.empty()) options.edges = load_edges(t1_path, in);
      if (highlight) options.highlighted = all_flip_cut_edges(ps);
      std::ofstream file_out(out_path);
      if (!file_out) fail(Errc::parse_error, "cannot open " + out_path);
      file_out << svg::render(ps, options);
    }
  } catch (const Error& e) {
    err << io::error_json(e).dump() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace cli
}  // namespace flipcut
