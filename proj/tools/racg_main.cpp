#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "racg/embedding.hpp"
#include "racg/group_io.hpp"
#include "racg/hyperbolicity.hpp"
#include "racg/nerve.hpp"
#include "racg/render.hpp"
#include "racg/tiles.hpp"

namespace {

using namespace racg;

struct Options {
  std::string group_file;
  std::size_t radius = 4;
  int kappa = 2;
  std::size_t distance_D = 0;  // 0 = derive from the measured constant
  std::uint64_t seed = 1;
  std::size_t samples = 2000;
  std::size_t bits = 65536;
  std::string out = ".";
};

void write_file(const Options& opt, const std::string& name,
                const std::string& content) {
  std::filesystem::create_directories(opt.out);
  std::ofstream f(std::filesystem::path(opt.out) / name, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + name);
  f << content;
}

Presentation load(const Options& opt) {
  return load_group_file(opt.group_file);
}

// One row per ball element: word, length, per-color lengths, and the
// psi coordinates (one serialized diary path per color).
std::string ball_csv(const Presentation& p, std::size_t R, int kappa) {
  std::ostringstream out;
  out << "element,length";
  for (Color c = 0; c < p.num_colors(); ++c) out << ",l" << (c + 1);
  for (Color c = 0; c < p.num_colors(); ++c) out << ",psi" << (c + 1);
  out << '\n';
  for (const Element& g : ball(p, R).elements) {
    std::string word = p.format_word(g.word());
    out << (word.empty() ? "e" : word) << ',' << g.length();
    for (Color c = 0; c < p.num_colors(); ++c)
      out << ',' << color_length(p, g, c);
    ProductPoint img = psi(p, g, kappa);
    for (const AugmentedPath& comp : img.components) {
      out << ',';
      for (std::size_t i = 0; i < comp.size(); ++i) {
        if (i) out << '|';
        out << '(';
        for (std::size_t s = 0; s < comp[i].entry.slots.size(); ++s) {
          if (s) out << ' ';
          const DiarySymbol& sym = comp[i].entry.slots[s];
          switch (sym.kind) {
            case DiarySymbol::Empty:
              out << '-';
              break;
            case DiarySymbol::ALetter:
              out << p.name(sym.g);
              break;
            case DiarySymbol::Simplex:
              out << '[';
              for (std::size_t v = 0; v < sym.simp.verts.size(); ++v) {
                if (v) out << ' ';
                out << p.name(sym.simp.verts[v]);
                if (!sym.simp.decor.empty()) out << '^' << sym.simp.decor[v];
              }
              out << ']';
              break;
          }
        }
        out << ')' << p.name(comp[i].a);
      }
    }
    out << '\n';
  }
  return out.str();
}

int cmd_analyze(const Options& opt) {
  Presentation p = load(opt);
  std::string report = nerve_analysis_json(p);
  write_file(opt, "report.json", report + "\n");
  std::cout << report << '\n';
  return 0;
}

int cmd_embed(const Options& opt) {
  Presentation p = load(opt);
  DistortionReport rep =
      distortion_report(p, opt.radius, opt.kappa, opt.samples, opt.seed);
  write_file(opt, "report.json", distortion_report_json(rep) + "\n");
  write_file(opt, "distortion.csv", distortion_csv(rep));
  write_file(opt, "ball.csv", ball_csv(p, opt.radius, opt.kappa));
  std::cout << "ball(" << opt.radius << "): injective="
            << (rep.injective ? "yes" : "no") << " max_ratio=" << rep.max_ratio
            << '\n';
  return 0;
}

int cmd_tile(const Options& opt) {
  Presentation p = load(opt);
  std::size_t ch_radius = std::min<std::size_t>(opt.radius, 4);
  std::size_t D = opt.distance_D ? opt.distance_D
                                 : 2 * measure_ch(p, ch_radius) + 3;
  WallColoring col =
      psi_coloring(p, walls_in_ball(p, opt.radius), opt.kappa, D, opt.radius);
  Orientation o = unbalanced_orientation(col);
  Resolution res = resolve_tiles(p, col, o, opt.radius);

  write_file(opt, "walls.csv", walls_csv(p, col, o));
  write_file(opt, "tiles.json", tiles_json(res) + "\n");

  std::vector<int> ones(col.palette.size(), 1);
  bool degenerate = false;
  nlohmann::json j;
  j["radius"] = opt.radius;
  j["kappa"] = opt.kappa;
  j["distance_D"] = D;
  j["walls"] = col.size();
  j["phi_colors"] = col.palette.size();
  j["unbalanced_orientation_all_positive"] =
      check_unbalanced(res, ones, &degenerate);
  write_file(opt, "report.json", j.dump(2) + "\n");
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_render(const Options& opt) {
  Presentation p = load(opt);
  std::size_t depth = opt.radius;
  std::size_t ch_radius = std::min<std::size_t>(depth + 1, 4);
  std::size_t D = opt.distance_D ? opt.distance_D
                                 : 2 * measure_ch(p, ch_radius) + 3;
  WallColoring col = psi_coloring(p, walls_in_ball(p, depth + 1), opt.kappa, D,
                                  depth + 1);
  DiskScene scene = build_disk_scene(p, depth, col);
  write_file(opt, "scene.svg", render_svg(scene));
  write_file(opt, "walls.csv", walls_csv(p, col, unbalanced_orientation(col)));
  std::cout << "chambers: " << scene.chambers.size() << '\n';
  return 0;
}

int cmd_morse_thue(const Options& opt) {
  auto seq = mt_prefix(opt.bits);
  auto cube = find_cube_parallel(seq);
  nlohmann::json j;
  j["bits"] = opt.bits;
  j["cube_free"] = !cube.has_value();
  if (cube) j["cube_offset"] = cube->offset;
  write_file(opt, "report.json", j.dump(2) + "\n");
  std::cout << j.dump(2) << '\n';
  return cube ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"right-angled Coxeter group toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool needs_group) {
    if (needs_group)
      cmd->add_option("group", opt.group_file, "group JSON file")->required();
    cmd->add_option("--radius", opt.radius, "ball radius / render depth");
    cmd->add_option("--kappa", opt.kappa, "diary page width")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--distance-D", opt.distance_D,
                    "wall distance threshold (0 = 2*C_h+3)");
    cmd->add_option("--seed", opt.seed, "random seed");
    cmd->add_option("--out", opt.out, "output directory");
    return cmd;
  };

  auto* analyze = add_common(app.add_subcommand("analyze", "nerve analysis"),
                             true);
  auto* embed = add_common(
      app.add_subcommand("embed", "tree-product embedding report"), true);
  embed->add_option("--samples", opt.samples, "distortion sample pairs");
  auto* tile = add_common(
      app.add_subcommand("tile", "walls, coloring and tiles"), true);
  auto* render = add_common(
      app.add_subcommand("render", "Poincare disk SVG"), true);
  auto* mt = add_common(app.add_subcommand("morse-thue", "cube-free check"),
                        false);
  mt->add_option("--bits", opt.bits, "prefix length");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(opt);
    if (app.got_subcommand(embed)) return cmd_embed(opt);
    if (app.got_subcommand(tile)) return cmd_tile(opt);
    if (app.got_subcommand(render)) return cmd_render(opt);
    if (app.got_subcommand(mt)) return cmd_morse_thue(opt);
  } catch (const racg::InvalidInput& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
