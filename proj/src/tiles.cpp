#include "racg/tiles.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <set>

namespace racg {

SignedColor oppose(SignedColor f) { return {f.first, -f.second}; }

Resolution resolve_tiles(const Presentation& p, const WallColoring& col,
                         const Orientation& o, std::size_t R) {
  if (o.size() != col.size())
    throw InvalidInput("orientation does not match the wall set");
  if (R > col.radius)
    throw InvalidInput("resolution radius exceeds the coloring's ball");
  Resolution res;
  Ball B = ball(p, R == 0 ? 0 : R - 1);
  std::map<Tile, std::size_t> counts;
  for (const Element& g : B.elements) {
    Tile t;
    for (Gen s = 0; s < Gen(p.rank()); ++s) {
      Wall w = wall_of_edge(p, g, s);
      std::size_t i = col.set.index_of(w.reflection);
      int side =
          side_of_wall(p, g, col.set.walls[i]) == Side::Left ? 1 : -1;
      t.emplace_back(col.phi_id[i], side * o[i]);
    }
    std::sort(t.begin(), t.end());
    ++counts[t];
    res.chambers.push_back(g);
    res.tiles.push_back(std::move(t));
  }
  for (auto& [tile, n] : counts) res.counts.emplace_back(tile, n);
  return res;
}

int chamber_weight(const Tile& t, const std::vector<int>& w) {
  int total = 0;
  for (const auto& [id, sign] : t) {
    if (id < 0 || std::size_t(id) >= w.size())
      throw InvalidInput("weight missing for a face color");
    total += sign * w[id];
  }
  return total;
}

BalanceResult balance_search(const Resolution& res,
                             const std::vector<int>& w) {
  if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; }))
    throw InvalidInput("weight function is trivial");
  BalanceResult out;
  for (std::size_t i = 0; i < res.chambers.size(); ++i) {
    int weight = chamber_weight(res.tiles[i], w);
    if (weight > 0 && !out.positive) out.positive = res.chambers[i];
    if (weight < 0 && !out.negative) out.negative = res.chambers[i];
    if (out.positive && out.negative) break;
  }
  return out;
}

bool check_unbalanced(const Resolution& res, const std::vector<int>& w,
                      bool* degenerate) {
  if (degenerate) *degenerate = res.tiles.empty();
  for (const Tile& t : res.tiles)
    if (chamber_weight(t, w) <= 0) return false;
  return true;
}

std::string tiles_json(const Resolution& res) {
  nlohmann::json j;
  std::set<SignedColor> used;
  j["tiles"] = nlohmann::json::array();
  for (const auto& [tile, n] : res.counts) {
    nlohmann::json faces = nlohmann::json::array();
    for (const auto& [id, sign] : tile) {
      faces.push_back({{"phi", id}, {"sign", sign > 0 ? "+" : "-"}});
      used.insert({id, sign});
    }
    j["tiles"].push_back({{"faces", faces}, {"count", n}});
  }
  j["chambers"] = res.chambers.size();
  j["opposition"] = nlohmann::json::array();
  for (const auto& [id, sign] : used) {
    if (sign < 0) continue;
    j["opposition"].push_back(
        {{"phi", id}, {"from", "+"}, {"to", "-"}});
  }
  return j.dump(2);
}

}  // namespace racg
