#include "racg/nerve.hpp"

#include <algorithm>
#include <bit>

namespace racg {

std::optional<Square> find_square(const Presentation& p) {
  const int n = p.rank();
  // Iterate non-commuting pairs (t1, t2) and look for two non-commuting
  // common neighbors.
  for (int t1 = 0; t1 < n; ++t1)
    for (int t2 = t1 + 1; t2 < n; ++t2) {
      if (p.commutes(Gen(t1), Gen(t2))) continue;
      std::uint32_t common = p.commute_mask(Gen(t1)) & p.commute_mask(Gen(t2));
      for (int s1 = 0; s1 < n; ++s1) {
        if (!((common >> s1) & 1u)) continue;
        for (int s2 = s1 + 1; s2 < n; ++s2)
          if (((common >> s2) & 1u) && !p.commutes(Gen(s1), Gen(s2)))
            return Square{Gen(t1), Gen(t2), Gen(s1), Gen(s2)};
      }
    }
  return std::nullopt;
}

bool validate_coloring(const Presentation& p, const std::vector<Color>& c) {
  if (static_cast<int>(c.size()) != p.rank()) return false;
  for (Color x : c)
    if (x < 0) return false;
  for (int s = 0; s < p.rank(); ++s)
    for (int t = s + 1; t < p.rank(); ++t)
      if (p.commutes(Gen(s), Gen(t)) && c[s] == c[t]) return false;
  return true;
}

namespace {

// Branch and bound: vertices in largest-degree-first order, classic
// prune when used-colors + 1 >= best known.
struct Exact {
  const Presentation& p;
  std::vector<int> order;
  std::vector<Color> assign, best_assign;
  int best;

  explicit Exact(const Presentation& pp) : p(pp) {
    const int n = p.rank();
    order.resize(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return std::popcount(p.commute_mask(Gen(a))) >
             std::popcount(p.commute_mask(Gen(b)));
    });
    assign.assign(n, -1);
    best = n + 1;
  }

  void run(std::size_t idx, int used) {
    if (used >= best) return;
    if (idx == order.size()) {
      best = used;
      best_assign = assign;
      return;
    }
    int v = order[idx];
    for (int col = 0; col < std::min(used + 1, best - 1); ++col) {
      bool ok = true;
      for (int u = 0; u < p.rank() && ok; ++u)
        if (assign[u] == col && p.commutes(Gen(u), Gen(v))) ok = false;
      if (!ok) continue;
      assign[v] = col;
      run(idx + 1, std::max(used, col + 1));
      assign[v] = -1;
    }
  }
};

}  // namespace

ChromaticResult chromatic_coloring(const Presentation& p) {
  ChromaticResult out;
  const int n = p.rank();
  if (n <= 24) {
    Exact bb(p);
    bb.run(0, 0);
    out.coloring = bb.best_assign;
    out.chromatic_number = bb.best;
    out.exact = true;
  } else {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return std::popcount(p.commute_mask(Gen(a))) >
             std::popcount(p.commute_mask(Gen(b)));
    });
    out.coloring.assign(n, -1);
    int used = 0;
    for (int v : order) {
      std::uint32_t taken = 0;
      for (int u = 0; u < n; ++u)
        if (out.coloring[u] >= 0 && p.commutes(Gen(u), Gen(v)))
          taken |= (1u << out.coloring[u]);
      int col = 0;
      while ((taken >> col) & 1u) ++col;
      out.coloring[v] = col;
      used = std::max(used, col + 1);
    }
    out.chromatic_number = used;
    out.exact = false;
  }
  return out;
}

namespace {

void grow_cliques(const Presentation& p, std::uint32_t allowed,
                  std::vector<Gen>& cur, Gen from,
                  std::vector<std::vector<Gen>>& out) {
  for (int v = from; v < p.rank(); ++v) {
    if (!((allowed >> v) & 1u)) continue;
    cur.push_back(Gen(v));
    out.push_back(cur);
    grow_cliques(p, allowed & p.commute_mask(Gen(v)), cur, Gen(v + 1), out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Gen>> enumerate_simplices(const Presentation& p,
                                                  Color excluded) {
  if (excluded < 0 || excluded >= p.num_colors())
    throw InvalidInput("unknown color index");
  std::uint32_t allowed = 0;
  for (int v = 0; v < p.rank(); ++v)
    if (p.color(Gen(v)) != excluded) allowed |= (1u << v);
  std::vector<std::vector<Gen>> out;
  std::vector<Gen> cur;
  grow_cliques(p, allowed, cur, 0, out);
  return out;
}

std::vector<std::vector<Gen>> enumerate_all_simplices(const Presentation& p) {
  std::uint32_t allowed = (p.rank() == 32) ? ~0u : ((1u << p.rank()) - 1);
  std::vector<std::vector<Gen>> out;
  std::vector<Gen> cur;
  grow_cliques(p, allowed, cur, 0, out);
  return out;
}

}  // namespace racg
