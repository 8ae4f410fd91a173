#pragma once

#include <optional>
#include <vector>

#include "racg/presentation.hpp"

namespace racg {

/// Four generators forming an induced 4-cycle of commutations: each s_i
/// commutes with both t_j, while s1/s2 and t1/t2 do not commute.
struct Square {
  Gen t1, t2, s1, s2;
};

/// Witness square in the nerve's 1-skeleton, if any.  The group is
/// hyperbolic exactly when there is none.
std::optional<Square> find_square(const Presentation& p);

struct ChromaticResult {
  std::vector<Color> coloring;  // proper coloring of the commutation graph
  int chromatic_number = 0;
  bool exact = true;  // false when the size budget forced greedy fallback
};

/// Minimum proper coloring of the commutation graph (exact branch and
/// bound up to 24 vertices, greedy largest-degree-first beyond).
ChromaticResult chromatic_coloring(const Presentation& p);

/// True iff adjacent vertices get different colors and every color that
/// appears twice only does so on non-adjacent vertices.
bool validate_coloring(const Presentation& p, const std::vector<Color>& c);

/// All nonempty cliques of the commutation graph avoiding color `excluded`
/// (the simplex alphabet Sigma_a).  Each clique is a sorted generator list.
std::vector<std::vector<Gen>> enumerate_simplices(const Presentation& p,
                                                  Color excluded);

/// All nonempty cliques, no color restriction.
std::vector<std::vector<Gen>> enumerate_all_simplices(const Presentation& p);

}  // namespace racg
