#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "racg/render.hpp"

using namespace racg;
namespace fs = std::filesystem;

namespace {

int run(const std::string& cmd) {
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream out;
  out << f.rdbuf();
  return out.str();
}

std::string cli() { return RACG_CLI_PATH; }
std::string data(const std::string& name) {
  return std::string(RACG_SOURCE_DIR) + "/data/" + name;
}

WallColoring hex_coloring(const Presentation& p, std::size_t R) {
  return psi_coloring(p, walls_in_ball(p, R), 2, 5, R);
}

}  // namespace

TEST_CASE("nerve cycle detection") {
  Presentation hexa = hexagon_group();
  std::vector<Gen> cyc = nerve_cycle(hexa);
  REQUIRE(cyc.size() == 6);
  std::vector<bool> seen(6, false);
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    seen[cyc[i]] = true;
    CHECK(hexa.commutes(cyc[i], cyc[(i + 1) % cyc.size()]));
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));

  CHECK(nerve_cycle(pentagon_group()).size() == 5);
  CHECK_THROWS_AS(nerve_cycle(four_cycle_group()), InvalidInput);
}

TEST_CASE("depth-0 scene: one chamber, distinct base edge colors") {
  Presentation p = hexagon_group();
  WallColoring col = hex_coloring(p, 2);
  DiskScene scene = build_disk_scene(p, 0, col);
  REQUIRE(scene.chambers.size() == 1);
  REQUIRE(scene.chambers[0].verts.size() == 6);
  std::set<int> colors(scene.chambers[0].edge_phi.begin(),
                       scene.chambers[0].edge_phi.end());
  CHECK(colors.size() == 6);

  // right-angled hexagon circumradius
  double rh = std::acosh(1.0 / std::tan(M_PI / 6));
  double re = std::tanh(rh / 2);
  for (const Vec& v : scene.chambers[0].verts)
    CHECK(std::abs(std::hypot(v.x, v.y) - re) < 1e-12);

  CHECK_THROWS_AS(build_disk_scene(p, 4, col), InvalidInput);
}

TEST_CASE("depth-2 scene: 31 chambers, geometry consistent with the ball") {
  Presentation p = hexagon_group();
  WallColoring col = hex_coloring(p, 3);
  DiskScene scene = build_disk_scene(p, 2, col);
  REQUIRE(scene.chambers.size() == 31);

  for (const ChamberPoly& ch : scene.chambers)
    for (const Vec& v : ch.verts) CHECK(std::hypot(v.x, v.y) < 1.0);

  // geometric adjacency: chambers sharing an edge (endpoint pair within
  // tolerance) must be exactly the Cayley-adjacent element pairs
  struct GeoEdge {
    const ChamberPoly* owner;
    Vec a, b;
  };
  std::vector<GeoEdge> edges;
  for (const ChamberPoly& ch : scene.chambers)
    for (std::size_t j = 0; j < ch.verts.size(); ++j)
      edges.push_back(GeoEdge{&ch, ch.verts[j], ch.verts[(j + 1) % 6]});
  auto close = [](Vec u, Vec v) { return std::hypot(u.x - v.x, u.y - v.y) < 1e-9; };
  std::size_t shared = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].owner == edges[j].owner) continue;
      bool same = (close(edges[i].a, edges[j].a) && close(edges[i].b, edges[j].b)) ||
                  (close(edges[i].a, edges[j].b) && close(edges[i].b, edges[j].a));
      if (same) {
        ++shared;
        CHECK(distance(p, edges[i].owner->g, edges[j].owner->g) == 1);
      }
    }
  std::size_t cayley_edges = 0;
  Ball B = ball(p, 2);
  for (const Element& g : B.elements)
    for (Gen s = 0; s < 6; ++s) {
      Element h = multiply_gen(p, g, s);
      if (h.length() > g.length() && h.length() <= 2) ++cayley_edges;
    }
  CHECK(shared == cayley_edges);

  // edge colors match the walls.csv emitted for the same coloring
  std::map<std::string, int> csv_phi;
  std::string csv = walls_csv(p, col, unbalanced_orientation(col));
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    auto c1 = line.find(',');
    auto c2 = line.find(',', c1 + 1);
    auto c3 = line.find(',', c2 + 1);
    csv_phi[line.substr(0, c1)] =
        std::stoi(line.substr(c2 + 1, c3 - c2 - 1));
  }
  for (const ChamberPoly& ch : scene.chambers)
    for (std::size_t j = 0; j < ch.edge_gen.size(); ++j) {
      Wall w = wall_of_edge(p, ch.g, ch.edge_gen[j]);
      std::string key = p.format_word(w.reflection.word());
      CHECK(csv_phi.at(key) == ch.edge_phi[j]);
    }
}

TEST_CASE("svg output: deterministic, six decimals, one path per edge") {
  Presentation p = hexagon_group();
  WallColoring col = hex_coloring(p, 2);
  DiskScene scene = build_disk_scene(p, 1, col);
  std::string svg = render_svg(scene);
  CHECK(svg == render_svg(scene));
  CHECK(svg.rfind("<svg", 0) == 0);

  std::size_t paths = 0;
  for (std::size_t at = svg.find("<path"); at != std::string::npos;
       at = svg.find("<path", at + 1))
    ++paths;
  CHECK(paths == scene.chambers.size() * 6);

  // every emitted coordinate has exactly six fractional digits
  std::size_t m = svg.find("d=\"M ");
  REQUIRE(m != std::string::npos);
  std::string coord = svg.substr(m + 5, svg.find(' ', m + 5) - m - 5);
  auto dot = coord.find('.');
  REQUIRE(dot != std::string::npos);
  CHECK(coord.size() - dot - 1 == 6);
}

TEST_CASE("cli: analyze, exit codes, determinism") {
  fs::path tmp = fs::temp_directory_path() / "racg_cli_test";
  fs::remove_all(tmp);
  fs::create_directories(tmp);
  std::string out1 = (tmp / "a").string(), out2 = (tmp / "b").string();

  CHECK(run(cli() + " analyze " + data("hexagon.json") + " --out " + out1 +
            " > /dev/null") == 0);
  std::string report = slurp(fs::path(out1) / "report.json");
  CHECK(report.find("\"hyperbolic\": true") != std::string::npos);
  CHECK(report.find("\"chromatic_number\": 2") != std::string::npos);

  // malformed JSON: exit code 2 with a diagnostic
  fs::path bad = tmp / "bad.json";
  std::ofstream(bad) << "{\"generators\": [\"s1\",";
  CHECK(run(cli() + " analyze " + bad.string() + " --out " + out1 +
            " 2> " + (tmp / "err.txt").string()) == 2);
  CHECK(!slurp(tmp / "err.txt").empty());

  // embed: byte-identical outputs for a fixed seed
  std::string embed_args = " embed " + data("hexagon.json") +
                           " --radius 3 --samples 200 --seed 9 > /dev/null";
  CHECK(run(cli() + embed_args + " --out " + out1) == 0);
  CHECK(run(cli() + embed_args + " --out " + out2) == 0);
  CHECK(slurp(fs::path(out1) / "report.json") ==
        slurp(fs::path(out2) / "report.json"));
  CHECK(slurp(fs::path(out1) / "distortion.csv") ==
        slurp(fs::path(out2) / "distortion.csv"));
  std::string ballcsv = slurp(fs::path(out1) / "ball.csv");
  std::size_t rows = std::count(ballcsv.begin(), ballcsv.end(), '\n');
  CHECK(rows == ball(hexagon_group(), 3).elements.size() + 1);
  CHECK(ballcsv.rfind("element,length,l1,l2,psi1,psi2", 0) == 0);
  CHECK(run(cli() + " embed " + data("hexagon.json") +
            " --radius 3 --samples 200 --seed 10 --out " + out2 +
            " > /dev/null") == 0);
  CHECK(slurp(fs::path(out1) / "distortion.csv") !=
        slurp(fs::path(out2) / "distortion.csv"));

  // tile and render produce their artifacts
  CHECK(run(cli() + " tile " + data("hexagon.json") +
            " --radius 3 --distance-D 5 --out " + out1 + " > /dev/null") == 0);
  CHECK(fs::exists(fs::path(out1) / "walls.csv"));
  CHECK(fs::exists(fs::path(out1) / "tiles.json"));

  CHECK(run(cli() + " render " + data("hexagon.json") +
            " --radius 2 --distance-D 5 --out " + out1 + " > /dev/null") == 0);
  std::string svg = slurp(fs::path(out1) / "scene.svg");
  std::size_t paths = 0;
  for (std::size_t at = svg.find("<path"); at != std::string::npos;
       at = svg.find("<path", at + 1))
    ++paths;
  CHECK(paths == 31 * 6);

  CHECK(run(cli() + " morse-thue --bits 4096 --out " + out1 +
            " > /dev/null") == 0);
  CHECK(slurp(fs::path(out1) / "report.json")
            .find("\"cube_free\": true") != std::string::npos);

  fs::remove_all(tmp);
}
