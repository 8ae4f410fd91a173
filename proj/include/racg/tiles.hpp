#pragma once

#include <optional>

#include "racg/walls.hpp"

namespace racg {

/// A signed face color (Phi palette id, sign in {+1,-1}); a tile is the
/// sorted multiset of its chamber's |S| signed face colors.
using SignedColor = std::pair<int, int>;
using Tile = std::vector<SignedColor>;

SignedColor oppose(SignedColor f);

/// Geometric resolution of the coloring over the chambers of
/// ball(R-1) (so that every incident face stays inside ball(R)).
struct Resolution {
  std::vector<Element> chambers;
  std::vector<Tile> tiles;                            // per chamber
  std::vector<std::pair<Tile, std::size_t>> counts;  // distinct tiles
};
Resolution resolve_tiles(const Presentation& p, const WallColoring& col,
                         const Orientation& o, std::size_t R);

/// Weights are given on positive signed colors, one per palette entry;
/// w(id, -1) = -w(id, +1) by the weight-function axiom.
int chamber_weight(const Tile& t, const std::vector<int>& w);

struct BalanceResult {
  std::optional<Element> positive, negative;
};
BalanceResult balance_search(const Resolution& res, const std::vector<int>& w);

/// True iff every tile has strictly positive weight.  `degenerate` is
/// set when the tile set is empty (vacuous truth).
bool check_unbalanced(const Resolution& res, const std::vector<int>& w,
                      bool* degenerate = nullptr);

/// tiles.json: distinct tile multisets with counts plus the opposition
/// table over the signed colors in use.
std::string tiles_json(const Resolution& res);

}  // namespace racg
