#pragma once

#include <string>
#include <vector>

#include "racg/walls.hpp"

namespace racg {

struct Vec {
  double x = 0, y = 0;
};

/// One chamber copy: the base polygon pushed forward by the group
/// element.  Edge j joins verts[j] and verts[(j+1)%p]; it lies on the
/// wall of the Cayley edge (g, g*edge_gen[j]) and is stroked by that
/// wall's Phi palette id.
struct ChamberPoly {
  Element g;
  std::vector<Vec> verts;
  std::vector<Gen> edge_gen;
  std::vector<int> edge_phi;
};

struct DiskScene {
  int p = 0;                    // polygon size = rank
  std::vector<Vec> base_verts;  // regular right-angled p-gon
  std::vector<ChamberPoly> chambers;
};

/// The generator sequence around the nerve, which must be a single
/// p-cycle with p >= 5 (the right-angled p-gon condition).  Starts at
/// generator 0 and turns toward its smaller neighbor.
std::vector<Gen> nerve_cycle(const Presentation& pr);

/// Chambers of ball(depth) in the Poincare disk.  The base p-gon is the
/// regular right-angled one, circumradius R_h with cosh R_h = cot(pi/p);
/// generators act as inversions in the base edge circles.  Chambers are
/// deduplicated by group element, never by geometry.  The coloring must
/// cover ball(depth+1) so that every face's wall is known.
DiskScene build_disk_scene(const Presentation& pr, std::size_t depth,
                           const WallColoring& col);

/// SVG with every chamber edge drawn as a sampled geodesic arc, stroked
/// by Phi palette id.  Coordinates carry six fractional digits.
std::string render_svg(const DiskScene& scene);

}  // namespace racg
