#include "racg/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace racg {

namespace {

struct Circle {
  Vec c;
  double r2 = 0;
};

// The circle through z1 and z2 orthogonal to the unit circle; such a
// circle satisfies 2 c.z = |z|^2 + 1 for both points.
bool ortho_circle(Vec z1, Vec z2, Circle& out) {
  double a1 = 2 * z1.x, b1 = 2 * z1.y, c1 = z1.x * z1.x + z1.y * z1.y + 1;
  double a2 = 2 * z2.x, b2 = 2 * z2.y, c2 = z2.x * z2.x + z2.y * z2.y + 1;
  double det = a1 * b2 - a2 * b1;
  if (std::abs(det) < 1e-12) return false;  // diameter: geodesic is a line
  out.c = Vec{(c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det};
  out.r2 = out.c.x * out.c.x + out.c.y * out.c.y - 1;
  return true;
}

Vec invert(const Circle& k, Vec z) {
  double dx = z.x - k.c.x, dy = z.y - k.c.y;
  double scale = k.r2 / (dx * dx + dy * dy);
  return Vec{k.c.x + dx * scale, k.c.y + dy * scale};
}

// Points along the geodesic arc from z1 to z2, endpoints included.
std::vector<Vec> sample_arc(Vec z1, Vec z2, int segments) {
  std::vector<Vec> out;
  Circle k;
  if (!ortho_circle(z1, z2, k)) {
    for (int i = 0; i <= segments; ++i) {
      double t = double(i) / segments;
      out.push_back(Vec{z1.x + t * (z2.x - z1.x), z1.y + t * (z2.y - z1.y)});
    }
    return out;
  }
  double r = std::sqrt(k.r2);
  double t1 = std::atan2(z1.y - k.c.y, z1.x - k.c.x);
  double t2 = std::atan2(z2.y - k.c.y, z2.x - k.c.x);
  double d = t2 - t1;
  while (d > M_PI) d -= 2 * M_PI;
  while (d < -M_PI) d += 2 * M_PI;  // the geodesic is the minor arc
  for (int i = 0; i <= segments; ++i) {
    double t = t1 + d * double(i) / segments;
    out.push_back(Vec{k.c.x + r * std::cos(t), k.c.y + r * std::sin(t)});
  }
  return out;
}

}  // namespace

std::vector<Gen> nerve_cycle(const Presentation& pr) {
  const int p = pr.rank();
  if (p < 5) throw InvalidInput("rendering needs a p-cycle nerve with p >= 5");
  std::vector<std::vector<Gen>> nbr(p);
  for (Gen s = 0; s < Gen(p); ++s)
    for (Gen t = 0; t < Gen(p); ++t)
      if (s != t && pr.commutes(s, t)) nbr[s].push_back(t);
  for (const auto& v : nbr)
    if (v.size() != 2)
      throw InvalidInput("rendering needs a p-cycle nerve (degree 2)");
  std::vector<Gen> cycle{0, nbr[0][0] < nbr[0][1] ? nbr[0][0] : nbr[0][1]};
  while (cycle.size() < std::size_t(p)) {
    Gen cur = cycle.back(), prev = cycle[cycle.size() - 2];
    Gen next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
    if (next == 0) throw InvalidInput("nerve is not a single cycle");
    cycle.push_back(next);
  }
  Gen last = cycle.back();
  if (nbr[last][0] != 0 && nbr[last][1] != 0)
    throw InvalidInput("nerve is not a single cycle");
  return cycle;
}

DiskScene build_disk_scene(const Presentation& pr, std::size_t depth,
                           const WallColoring& col) {
  std::vector<Gen> cycle = nerve_cycle(pr);
  if (col.radius < depth + 1)
    throw InvalidInput("coloring ball too small for the requested depth");
  const int p = pr.rank();

  DiskScene scene;
  scene.p = p;
  // right-angled regular p-gon: cosh R = cot(pi/p) * cot(pi/4)
  double rh = std::acosh(1.0 / std::tan(M_PI / p));
  double re = std::tanh(rh / 2);
  for (int k = 0; k < p; ++k) {
    double t = 2 * M_PI * k / p;
    scene.base_verts.push_back(Vec{re * std::cos(t), re * std::sin(t)});
  }

  // edge j of the base polygon carries generator cycle[j]
  std::vector<Circle> mirror(p);
  std::vector<std::size_t> edge_of_gen(p);
  for (int j = 0; j < p; ++j) {
    if (!ortho_circle(scene.base_verts[j], scene.base_verts[(j + 1) % p],
                      mirror[cycle[j]]))
      throw InvalidInput("degenerate polygon edge");
    edge_of_gen[cycle[j]] = j;
  }

  for (const Element& g : ball(pr, depth).elements) {
    ChamberPoly poly;
    poly.g = g;
    // rho_g = sigma_{w0} o ... o sigma_{w_{m-1}}: innermost first
    poly.verts = scene.base_verts;
    const Word& w = g.word();
    for (std::size_t i = w.size(); i-- > 0;)
      for (Vec& v : poly.verts) v = invert(mirror[w[i]], v);
    for (int j = 0; j < p; ++j) {
      Gen s = cycle[j];
      poly.edge_gen.push_back(s);
      Wall wall = wall_of_edge(pr, g, s);
      poly.edge_phi.push_back(
          col.phi_id[col.set.index_of(wall.reflection)]);
    }
    scene.chambers.push_back(std::move(poly));
  }
  return scene;
}

std::string render_svg(const DiskScene& scene) {
  std::ostringstream out;
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return std::string(buf);
  };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.1 -1.1 2.2 "
         "2.2\" width=\"800\" height=\"800\">\n";
  out << "<circle cx=\"0.000000\" cy=\"0.000000\" r=\"1.000000\" "
         "fill=\"none\" stroke=\"#888888\" stroke-width=\"0.004000\"/>\n";
  for (const ChamberPoly& ch : scene.chambers) {
    for (std::size_t j = 0; j < ch.verts.size(); ++j) {
      std::vector<Vec> arc = sample_arc(
          ch.verts[j], ch.verts[(j + 1) % ch.verts.size()], 16);
      int hue = (ch.edge_phi[j] * 47) % 360;
      out << "<path d=\"M " << num(arc[0].x) << ' ' << num(arc[0].y);
      for (std::size_t i = 1; i < arc.size(); ++i)
        out << " L " << num(arc[i].x) << ' ' << num(arc[i].y);
      out << "\" fill=\"none\" stroke=\"hsl(" << hue
          << ",70%,45%)\" stroke-width=\"0.006000\" data-phi=\""
          << ch.edge_phi[j] << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace racg
