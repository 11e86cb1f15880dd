#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"

#include "flipcut/cli.hpp"
#include "flipcut/generators.hpp"
#include "flipcut/io.hpp"

using namespace flipcut;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return Run{code, out.str(), err.str()};
}

std::string grid3_text() {
  std::ostringstream out;
  io::write_point_set(out, gen::grid(3, 3));
  return out.str();
}

}  // namespace

TEST_CASE("test-edge text output on the grid") {
  Run r = run_cli({"test-edge", "-", "--edge", "3", "4"}, grid3_text());
  CHECK(r.code == 0);
  CHECK(r.out == "flip_cut: true, components: 2\n");
  Run boundary = run_cli({"test-edge", "-", "--edge", "0", "1"}, grid3_text());
  CHECK(boundary.out == "flip_cut: false, components: 0\n");
}

TEST_CASE("test-edge json round-trips the schema") {
  Run r = run_cli({"test-edge", "-", "--edge", "3", "4", "--json"}, grid3_text());
  json j = json::parse(r.out);
  CHECK(j["edge"] == json::array({3, 4}));
  CHECK(j["flip_cut"] == true);
  CHECK(j["component_count"] == 2);
  CHECK(j["components"][0]["A"] == json::array({6}));
  CHECK(j["components"][0]["B"] == json::array({1}));
}

TEST_CASE("test-edge and oracle flip-cut agree") {
  for (std::uint64_t seed : {4u, 9u}) {
    std::ostringstream pts;
    io::write_point_set(pts, gen::random_points(6, 10, seed, true));
    PointSet ps = gen::random_points(6, 10, seed, true);
    for (const Edge& e : all_valid_edges(ps)) {
      Run fast = run_cli(
          {"test-edge", "-", "--edge", std::to_string(e.i), std::to_string(e.j), "--json"},
          pts.str());
      Run slow = run_cli(
          {"oracle", "flip-cut", "-", "--forbid", std::to_string(e.i), std::to_string(e.j)},
          pts.str());
      REQUIRE(fast.code == 0);
      REQUIRE(slow.code == 0);
      CHECK(json::parse(fast.out)["flip_cut"] == json::parse(slow.out)["flip_cut"]);
    }
  }
}

TEST_CASE("invalid edge yields a machine-readable domain error") {
  Run r = run_cli({"test-edge", "-", "--edge", "0", "2"}, grid3_text());
  CHECK(r.code == 1);
  json j = json::parse(r.err);
  CHECK(j["error"] == "not_an_edge");
}

TEST_CASE("usage errors exit with 2") {
  Run r = run_cli({"test-edge"});
  CHECK(r.code == 2);
  Run unknown = run_cli({"no-such-verb"});
  CHECK(unknown.code == 2);
}

TEST_CASE("gen pipes into all-edges") {
  Run gen_run = run_cli({"gen", "convex", "8"});
  REQUIRE(gen_run.code == 0);
  Run edges = run_cli({"all-edges", "-", "--json"}, gen_run.out);
  CHECK(json::parse(edges.out)["count"] == 0);
  Run grid_edges = run_cli({"all-edges", "-", "--parallel", "--json"}, grid3_text());
  CHECK(json::parse(grid_edges.out)["count"] == 4);
}

TEST_CASE("components verb emits the full schema") {
  Run r = run_cli({"components", "-", "--edge", "3", "4"}, grid3_text());
  json j = json::parse(r.out);
  CHECK(j["components"].size() == 2);
}

TEST_CASE("convex-cutset emits the zigzag data") {
  Run r = run_cli({"convex-cutset", "6"});
  json j = json::parse(r.out);
  CHECK(j["n"] == 6);
  CHECK(j["X"].size() == 3);
  CHECK(j["T"].size() == 3);
  CHECK(j["T2"].size() == 3);
}

TEST_CASE("same-component against triangulation files") {
  gen::Hourglass h = gen::hourglass(2);
  std::ostringstream pts;
  io::write_point_set(pts, h.points);
  auto tri_file = [&](Edge seedling) {
    Triangulation t = constrained_triangulation(h.points, {seedling});
    std::ostringstream out;
    io::write_edge_list(out, t.edges());
    return out.str();
  };
  std::string t1 = tri_file(Edge(h.upper[0], h.lower[0]));
  std::string t2 = tri_file(Edge(h.upper[1], h.lower[1]));
  // write through temp files to exercise the path-based loader
  std::string dir = "cli_test_tmp";
  std::string p1 = dir + "_t1.txt", p2 = dir + "_t2.txt", pp = dir + "_pts.txt";
  {
    std::ofstream(pp) << pts.str();
    std::ofstream(p1) << t1;
    std::ofstream(p2) << t2;
  }
  Run r = run_cli({"same-component", pp, "--edge", std::to_string(h.u), std::to_string(h.v),
                   "--t1", p1, "--t2", p2});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["same_component"] == false);
  Run same = run_cli({"same-component", pp, "--edge", std::to_string(h.u), std::to_string(h.v),
                      "--t1", p1, "--t2", p1});
  CHECK(json::parse(same.out)["same_component"] == true);
  Run slow = run_cli({"oracle", "same-component", pp, "--edge", std::to_string(h.u),
                      std::to_string(h.v), "--t1", p1, "--t2", p2});
  CHECK(json::parse(slow.out)["same_component"] == false);
  std::remove(pp.c_str());
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST_CASE("connect-convex emits a flip path") {
  std::string dir = "cli_connect_tmp";
  std::string from = dir + "_from.txt", to = dir + "_to.txt";
  {
    std::ofstream(from) << "0 2\n0 3\n0 4\n";
    std::ofstream(to) << "1 3\n1 4\n1 5\n";
  }
  Run r = run_cli({"connect-convex", "6", "--forbid", "2", "4", "--from", from, "--to", to});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["start"].size() == 3);
  CHECK(j["moves"].size() >= 1);
  std::remove(from.c_str());
  std::remove(to.c_str());
}

TEST_CASE("render produces deterministic svg with highlighted cut edges") {
  std::string path1 = "render_tmp1.svg", path2 = "render_tmp2.svg";
  Run r1 = run_cli({"render", "-", "--highlight-flip-cut", "-o", path1}, grid3_text());
  Run r2 = run_cli({"render", "-", "--highlight-flip-cut", "-o", path2}, grid3_text());
  REQUIRE(r1.code == 0);
  std::ifstream f1(path1), f2(path2);
  std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
  std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
  CHECK(s1 == s2);
  CHECK(s1.find("<svg") == 0);
  // one highlighted line per flip cut edge of the grid
  size_t count = 0;
  for (size_t at = s1.find("class=\"cut\""); at != std::string::npos;
       at = s1.find("class=\"cut\"", at + 1))
    ++count;
  CHECK(count == 4);
  std::remove(path1.c_str());
  std::remove(path2.c_str());
}

TEST_CASE("gen validates family parameters") {
  CHECK(run_cli({"gen", "grid", "3"}).code == 1);
  CHECK(run_cli({"gen", "nonsense", "3"}).code == 1);
  Run r = run_cli({"gen", "random", "6", "20", "--seed", "5"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  CHECK(io::read_point_set(in).size() == 6);
}

TEST_CASE("json edge lists are accepted for triangulations") {
  std::string path = "cli_json_tri.json";
  gen::Hourglass h = gen::hourglass(2);
  Triangulation t = constrained_triangulation(h.points, {Edge(h.upper[0], h.lower[0])});
  {
    std::ofstream out(path);
    out << json{{"edges", io::edges_json(t.edges())}}.dump();
  }
  std::string pts_path = "cli_json_pts.txt";
  {
    std::ofstream out(pts_path);
    io::write_point_set(out, h.points);
  }
  Run r = run_cli({"same-component", pts_path, "--edge", std::to_string(h.u),
                   std::to_string(h.v), "--t1", path, "--t2", path});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["same_component"] == true);
  std::remove(path.c_str());
  std::remove(pts_path.c_str());
}
