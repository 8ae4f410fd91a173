#pragma once

#include <optional>
#include <string>
#include <vector>

#include "racg/embedding.hpp"

namespace racg {

/// An edge of the Cayley graph, named by its lower endpoint: the edge
/// {chamber, chamber*s} with l(chamber*s) = l(chamber)+1.
struct Face {
  Element chamber;
  Gen s = 0;

  friend bool operator==(const Face& a, const Face& b) {
    return a.s == b.s && a.chamber == b.chamber;
  }
  friend bool operator<(const Face& a, const Face& b) {
    if (a.chamber != b.chamber) return a.chamber < b.chamber;
    return a.s < b.s;
  }
};

/// A wall is the class of edges flipped by one reflection.  In a RACG no
/// two distinct generators are conjugate, so every edge of the wall
/// carries the same generator and the S-color is well defined.
struct Wall {
  Element reflection;  // normal form of gamma s gamma^-1, the wall key
  Gen s = 0;
  Color s_color = 0;
  Element witness;  // shortlex-least lower endpoint seen in the ball
};

Wall wall_of_edge(const Presentation& p, const Element& gamma, Gen s);

struct WallSet {
  std::vector<Wall> walls;  // sorted by reflection key (shortlex)
  std::size_t radius = 0;

  std::size_t index_of(const Element& reflection) const;  // throws if absent
  const Wall* find(const Element& reflection) const;      // null if absent
};

/// Every wall with an edge lying inside ball(R) (both endpoints).
WallSet walls_in_ball(const Presentation& p, std::size_t R);

/// All edges of the wall inside ball(R), as lower-endpoint faces.
std::vector<Face> wall_edges(const Presentation& p, const Wall& w,
                             std::size_t R);

/// Phi color of a wall: the generator's color plus the last augmented
/// label of the decorated diary of witness*s in that color.  Independent
/// of the witness edge (tested, and relied on).
struct PhiColor {
  Color s_color = 0;
  AugmentedLabel last;

  friend bool operator==(const PhiColor& a, const PhiColor& b) {
    return a.s_color == b.s_color && a.last == b.last;
  }
  friend bool operator!=(const PhiColor& a, const PhiColor& b) {
    return !(a == b);
  }
};
bool phi_less(const PhiColor& a, const PhiColor& b);
PhiColor phi_color(const Presentation& p, const Wall& w, int kappa);

/// A chamber whose faces s and t lie on two same-S-color walls that
/// cross there (span a square).  Expected empty: commuting generators
/// never share a color.
struct SquareCrossing {
  Element chamber;
  Gen s = 0, t = 0;
};
std::vector<SquareCrossing> same_scolor_disjoint_check(const Presentation& p,
                                                       std::size_t R);

/// min over edge endpoints g1 of M1, g2 of M2 (within ball(R)) of
/// d(g1,g2)+1.  Empty edge set inside the ball -> nullopt.
std::optional<std::size_t> wall_distance(const Presentation& p, const Wall& a,
                                         const Wall& b, std::size_t R);

/// Psi = (Phi, f_D).  f_D is a greedy coloring of the conflict graph
/// (same S-color, wall distance < D), walls visited in reflection-key
/// shortlex order, so the result is deterministic.
struct WallColoring {
  WallSet set;
  int kappa = 2;
  std::size_t D = 0;
  std::size_t radius = 0;
  std::vector<PhiColor> palette;  // distinct Phi values, sorted by phi_less
  std::vector<int> phi_id;        // per wall index, into palette
  std::vector<int> decoration;    // per wall index, the f_D value

  std::size_t size() const { return set.walls.size(); }
};
WallColoring psi_coloring(const Presentation& p, const WallSet& ws, int kappa,
                          std::size_t D, std::size_t R);

enum class Side { Left, Right };  // base chamber side is Left

Side side_of_wall(const Presentation& p, const Element& chamber,
                  const Wall& w);

/// 1 + number of walls of the same Phi color strictly separating the
/// wall from the base chamber.  Precondition: same-S-color walls in the
/// ball are pairwise disjoint (throws InvalidInput otherwise).
std::size_t wall_level(const Presentation& p, const WallColoring& col,
                       std::size_t wall_index);
std::vector<std::size_t> wall_levels(const Presentation& p,
                                     const WallColoring& col);

/// Per-wall sign: which side of the wall is +.  Under +1 the base-side
/// faces are +; under -1 the far side is +.
using Orientation = std::vector<int>;

/// start_signs: one +-1 per palette entry; sign of a wall = start sign
/// of its Phi class, flipped (level-1) times.
Orientation alternating_orientation(const Presentation& p,
                                    const WallColoring& col,
                                    const std::vector<int>& start_signs);

/// Every wall oriented with the base side +: a face of chamber g is +
/// iff its wall does not separate g from the base chamber.
Orientation unbalanced_orientation(const WallColoring& col);

/// Sign of the face {chamber, chamber*s} under the orientation.
int face_sign(const Presentation& p, const WallColoring& col,
              const Orientation& o, const Element& chamber, Gen s);

/// Radial gallery from a face down to a base-chamber face.  The chamber
/// sequence (lower endpoints), reversed, is a geodesic from the
/// identity; the faces lie on pairwise distinct walls.
struct Gallery {
  std::vector<Face> faces;  // innermost (input) face first
  bool ok = false;
  std::string error;
};
Gallery gallery_reconstruct(const Presentation& p, const Face& face,
                            const WallColoring& col, std::size_t R);

/// Elements g of ball(r_small) whose left-translation pullback preserves
/// the Psi coloring on every wall whose translate stays keyed inside the
/// coloring.  Expected: only the identity.
std::vector<Element> translation_symmetries(const Presentation& p,
                                            const WallColoring& col,
                                            std::size_t r_small);

/// CSV: key, s_color, phi id, decoration, level, sign.
std::string walls_csv(const Presentation& p, const WallColoring& col,
                      const Orientation& o);

}  // namespace racg
