#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "racg/group.hpp"
#include "racg/presentation.hpp"

namespace racg {

/// A letter of the simplex alphabet: a clique of pairwise commuting
/// generators, at most one per color.  `decor` is empty until the word
/// is decorated; then it holds one bit per vertex.
struct SimplexLetter {
  std::vector<Gen> verts;  // ascending generator order
  std::vector<int> decor;  // empty, or one 0/1 bit per vertex

  friend bool operator==(const SimplexLetter& a, const SimplexLetter& b) {
    return a.verts == b.verts && a.decor == b.decor;
  }
  friend bool operator<(const SimplexLetter& a, const SimplexLetter& b) {
    if (a.verts != b.verts) return a.verts < b.verts;
    return a.decor < b.decor;
  }
};

/// Canonical a-representation W_1 a_1 ... W_r a_r W_{r+1}: the base-color
/// letters sit as far left as possible and every coefficient is in right
/// simplex presentation.  Unique per group element (tested, not assumed).
struct ARepresentation {
  Color base = 0;
  std::vector<Gen> a_letters;                      // a_1..a_r
  std::vector<std::vector<SimplexLetter>> coeffs;  // W_1..W_{r+1}

  std::size_t r() const { return a_letters.size(); }
  Word flatten() const;
  /// Letter count in the alphabet A ∪ Sigma_a (simplices count as one).
  std::size_t alphabet_length() const;
  std::string pretty(const Presentation& p) const;  // e.g. "[s2 s4] s1 [s6]"
};

/// Right simplex presentation Delta_q ... Delta_1 of a group element:
/// Delta_1 collects every letter movable to the end, then recurse.
/// Returned in word order (Delta_q first).
std::vector<SimplexLetter> right_simplex_presentation(const Presentation& p,
                                                      const Element& g);

ARepresentation canonical_a_representation(const Presentation& p,
                                           const Element& g, Color a);

/// perm[i] = position of input letter i in the flattened canonical form.
using ReductionMap = std::vector<std::size_t>;
ReductionMap reduction_map(const Presentation& p, const Word& reduced, Color a);

/// Composition analysis of a reduced concatenation UV per the structure
/// propositions.  `violations` lists any clause that fails; on hyperbolic
/// groups it stays empty, on non-hyperbolic groups the hyperbolicity
/// clauses may fire (the harness asserts they do on the 4-cycle group).
struct CompositionAnalysis {
  ARepresentation W;               // canonical form of UV
  ReductionMap phi;                // flattened UV -> flattened W
  std::vector<std::size_t> U_R;    // positions (in flattened UV) of U-letters
                                   // moved right of a_{p+1}
  std::size_t k = 0;               // alphabet length of V_{p+1}
  std::vector<std::string> violations;
};
CompositionAnalysis analyze_composition(const Presentation& p,
                                        const ARepresentation& U,
                                        const ARepresentation& V);

/// Prefix-difference check: with delta = median(1, g, h) holding p
/// base-color letters, the segments W_{p+1} a_{p+1} of the two canonical
/// forms must differ whenever both sides still have an a-letter.
struct PrefixDifference {
  bool applicable = false;  // both sides have an a-letter past the median
  bool differs = false;
  std::string left, right;  // pretty-printed segments
};
PrefixDifference check_prefix_difference(const Presentation& p,
                                         const Element& g, const Element& h,
                                         Color a);

/// Star projection W^b: each decorated simplex becomes its b-colored
/// decorated vertex, or a star when it has none; a-letters pass through.
struct StarLetter {
  enum Kind { Passthrough, BVertex, Star } kind = Star;
  Gen g = 0;       // for Passthrough / BVertex
  int decor = -1;  // for BVertex

  friend bool operator==(const StarLetter& x, const StarLetter& y) {
    return x.kind == y.kind && x.g == y.g && x.decor == y.decor;
  }
};
std::vector<StarLetter> star_projection(const Presentation& p,
                                        const ARepresentation& decorated,
                                        Color b);

}  // namespace racg
