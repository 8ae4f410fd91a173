#include "racg/walls.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>

namespace racg {

namespace {

Element conj_gen(const Presentation& p, const Element& gamma, Gen s) {
  Word w = gamma.word();
  w.push_back(s);
  Word inv(gamma.word().rbegin(), gamma.word().rend());
  w.insert(w.end(), inv.begin(), inv.end());
  return reduce(p, w);
}

int symbol_rank(const DiarySymbol& s) { return int(s.kind); }

bool symbol_less(const DiarySymbol& a, const DiarySymbol& b) {
  if (a.kind != b.kind) return symbol_rank(a) < symbol_rank(b);
  if (a.kind == DiarySymbol::ALetter) return a.g < b.g;
  if (a.kind == DiarySymbol::Simplex) return a.simp < b.simp;
  return false;
}

bool label_less(const AugmentedLabel& a, const AugmentedLabel& b) {
  if (a.a != b.a) return a.a < b.a;
  return std::lexicographical_compare(a.entry.slots.begin(),
                                      a.entry.slots.end(),
                                      b.entry.slots.begin(),
                                      b.entry.slots.end(), symbol_less);
}

}  // namespace

Wall wall_of_edge(const Presentation& p, const Element& gamma, Gen s) {
  Element upper = multiply_gen(p, gamma, s);
  const Element& lower = upper.length() > gamma.length() ? gamma : upper;
  Wall w;
  w.reflection = conj_gen(p, lower, s);
  w.s = s;
  w.s_color = p.color(s);
  w.witness = lower;
  return w;
}

std::size_t WallSet::index_of(const Element& reflection) const {
  const Wall* w = find(reflection);
  if (!w) throw InvalidInput("wall not in set");
  return std::size_t(w - walls.data());
}

const Wall* WallSet::find(const Element& reflection) const {
  auto it = std::lower_bound(
      walls.begin(), walls.end(), reflection,
      [](const Wall& w, const Element& key) { return w.reflection < key; });
  if (it == walls.end() || !(it->reflection == reflection)) return nullptr;
  return &*it;
}

WallSet walls_in_ball(const Presentation& p, std::size_t R) {
  Ball B = ball(p, R);
  std::map<Element, Wall> found;
  for (const Element& g : B.elements) {
    if (g.length() + 1 > R) continue;  // upper endpoint would leave the ball
    for (Gen s = 0; s < Gen(p.rank()); ++s) {
      if (multiply_gen(p, g, s).length() < g.length()) continue;
      Wall w = wall_of_edge(p, g, s);
      auto [it, inserted] = found.emplace(w.reflection, w);
      if (!inserted && w.witness < it->second.witness)
        it->second.witness = w.witness;
    }
  }
  WallSet ws;
  ws.radius = R;
  for (auto& [key, w] : found) ws.walls.push_back(std::move(w));
  return ws;
}

std::vector<Face> wall_edges(const Presentation& p, const Wall& w,
                             std::size_t R) {
  Ball B = ball(p, R);
  std::vector<Face> out;
  for (const Element& g : B.elements) {
    if (g.length() + 1 > R) continue;
    if (multiply_gen(p, g, w.s).length() < g.length()) continue;
    if (conj_gen(p, g, w.s) == w.reflection) out.push_back(Face{g, w.s});
  }
  return out;
}

bool phi_less(const PhiColor& a, const PhiColor& b) {
  if (a.s_color != b.s_color) return a.s_color < b.s_color;
  return label_less(a.last, b.last);
}

PhiColor phi_color(const Presentation& p, const Wall& w, int kappa) {
  PhiColor c;
  c.s_color = w.s_color;
  Element upper = multiply_gen(p, w.witness, w.s);
  AugmentedPath path = augmented_diary(p, upper, w.s_color, kappa, true);
  // witness * s ends in an s_color letter, so the path is nonempty
  c.last = path.back();
  return c;
}

std::vector<SquareCrossing> same_scolor_disjoint_check(const Presentation& p,
                                                       std::size_t R) {
  Ball B = ball(p, R);
  std::vector<SquareCrossing> out;
  for (const Element& g : B.elements) {
    if (g.length() + 1 > R) continue;
    for (Gen s = 0; s < Gen(p.rank()); ++s)
      for (Gen t = s + 1; t < Gen(p.rank()); ++t) {
        if (!p.commutes(s, t)) continue;  // no square, walls do not cross
        if (p.color(s) != p.color(t)) continue;
        out.push_back(SquareCrossing{g, s, t});
      }
  }
  return out;
}

namespace {

std::vector<Element> wall_endpoints(const Presentation& p, const Wall& w,
                                    std::size_t R) {
  std::vector<Element> out;
  for (Face f : wall_edges(p, w, R)) {
    out.push_back(f.chamber);
    out.push_back(multiply_gen(p, f.chamber, f.s));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::optional<std::size_t> wall_distance(const Presentation& p, const Wall& a,
                                         const Wall& b, std::size_t R) {
  if (a.reflection == b.reflection)
    throw InvalidInput("wall distance needs two distinct walls");
  if (a.s_color != b.s_color)
    throw InvalidInput("wall distance is defined within one S-color");
  std::vector<Element> ea = wall_endpoints(p, a, R);
  std::vector<Element> eb = wall_endpoints(p, b, R);
  if (ea.empty() || eb.empty()) return std::nullopt;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const Element& x : ea)
    for (const Element& y : eb) best = std::min(best, distance(p, x, y));
  return best + 1;
}

WallColoring psi_coloring(const Presentation& p, const WallSet& ws, int kappa,
                          std::size_t D, std::size_t R) {
  WallColoring col;
  col.set = ws;
  col.kappa = kappa;
  col.D = D;
  col.radius = R;

  const std::size_t n = ws.walls.size();
  col.phi_id.resize(n);
  col.decoration.assign(n, -1);

  std::vector<PhiColor> phis(n);
  for (std::size_t i = 0; i < n; ++i) phis[i] = phi_color(p, ws.walls[i], kappa);
  col.palette = phis;
  std::sort(col.palette.begin(), col.palette.end(), phi_less);
  col.palette.erase(
      std::unique(col.palette.begin(), col.palette.end(),
                  [](const PhiColor& a, const PhiColor& b) { return a == b; }),
      col.palette.end());
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::lower_bound(col.palette.begin(), col.palette.end(), phis[i],
                               phi_less);
    col.phi_id[i] = int(it - col.palette.begin());
  }

  // endpoints of every wall inside the ball, plus a reverse index
  Ball B = ball(p, R);
  std::vector<std::vector<Element>> pts(n);
  for (const Element& g : B.elements) {
    if (g.length() + 1 > R) continue;
    for (Gen s = 0; s < Gen(p.rank()); ++s) {
      Element h = multiply_gen(p, g, s);
      if (h.length() < g.length()) continue;
      std::size_t wi = ws.index_of(conj_gen(p, g, s));
      pts[wi].push_back(g);
      pts[wi].push_back(h);
    }
  }
  std::unordered_map<Element, std::vector<std::size_t>, ElementHash> owner;
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(pts[i].begin(), pts[i].end());
    pts[i].erase(std::unique(pts[i].begin(), pts[i].end()), pts[i].end());
    for (const Element& x : pts[i]) owner[x].push_back(i);
  }

  // conflicts: same S-color, wall distance < D.  Two walls are at
  // distance d+1 where d is the least group distance between endpoint
  // representations, so scanning the ball(D-2) neighborhood of every
  // endpoint finds every conflicting pair exactly.
  std::vector<std::vector<std::size_t>> conflicts(n);
  if (D >= 2) {
    Ball N = ball(p, D - 2);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(n); ++i) {
      std::vector<std::size_t> c;
      for (const Element& x : pts[i])
        for (const Element& u : N.elements) {
          auto it = owner.find(multiply(p, x, u));
          if (it == owner.end()) continue;
          for (std::size_t j : it->second)
            if (j != std::size_t(i) &&
                ws.walls[j].s_color == ws.walls[i].s_color)
              c.push_back(j);
        }
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      conflicts[i] = std::move(c);
    }
  }

  // greedy f_D in reflection shortlex order (= wall index order)
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> used;
    for (std::size_t j : conflicts[i]) {
      if (j >= i) continue;
      if (used.size() <= std::size_t(col.decoration[j]))
        used.resize(col.decoration[j] + 1, false);
      used[col.decoration[j]] = true;
    }
    int value = 0;
    while (std::size_t(value) < used.size() && used[value]) ++value;
    col.decoration[i] = value;
  }
  return col;
}

Side side_of_wall(const Presentation& p, const Element& chamber,
                  const Wall& w) {
  Element moved = multiply(p, w.reflection, chamber);
  return moved.length() > chamber.length() ? Side::Left : Side::Right;
}

namespace {

bool separates_from_base(const Presentation& p, const Wall& sep,
                         const Wall& m) {
  if (sep.reflection == m.reflection) return false;
  Element upper = multiply_gen(p, m.witness, m.s);
  return side_of_wall(p, m.witness, sep) == Side::Right &&
         side_of_wall(p, upper, sep) == Side::Right;
}

void require_disjoint_classes(const Presentation& p, const WallColoring& col) {
  if (!same_scolor_disjoint_check(p, col.radius).empty())
    throw InvalidInput("same-color walls cross inside the ball");
}

}  // namespace

std::size_t wall_level(const Presentation& p, const WallColoring& col,
                       std::size_t wall_index) {
  require_disjoint_classes(p, col);
  std::size_t level = 1;
  for (std::size_t j = 0; j < col.size(); ++j)
    if (j != wall_index && col.phi_id[j] == col.phi_id[wall_index] &&
        separates_from_base(p, col.set.walls[j], col.set.walls[wall_index]))
      ++level;
  return level;
}

std::vector<std::size_t> wall_levels(const Presentation& p,
                                     const WallColoring& col) {
  require_disjoint_classes(p, col);
  std::vector<std::size_t> out(col.size(), 1);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(col.size()); ++i)
    for (std::size_t j = 0; j < col.size(); ++j)
      if (j != std::size_t(i) && col.phi_id[j] == col.phi_id[i] &&
          separates_from_base(p, col.set.walls[j], col.set.walls[i]))
        ++out[i];
  return out;
}

Orientation alternating_orientation(const Presentation& p,
                                    const WallColoring& col,
                                    const std::vector<int>& start_signs) {
  if (start_signs.size() != col.palette.size())
    throw InvalidInput("one start sign per Phi color required");
  for (int s : start_signs)
    if (s != 1 && s != -1) throw InvalidInput("signs must be +1 or -1");
  std::vector<std::size_t> levels = wall_levels(p, col);
  Orientation o(col.size());
  for (std::size_t i = 0; i < col.size(); ++i) {
    int sign = start_signs[col.phi_id[i]];
    if ((levels[i] - 1) % 2 == 1) sign = -sign;
    o[i] = sign;
  }
  return o;
}

Orientation unbalanced_orientation(const WallColoring& col) {
  return Orientation(col.size(), 1);
}

int face_sign(const Presentation& p, const WallColoring& col,
              const Orientation& o, const Element& chamber, Gen s) {
  Wall w = wall_of_edge(p, chamber, s);
  std::size_t i = col.set.index_of(w.reflection);
  int side = side_of_wall(p, chamber, col.set.walls[i]) == Side::Left ? 1 : -1;
  return side * o[i];
}

Gallery gallery_reconstruct(const Presentation& p, const Face& face,
                            const WallColoring& col, std::size_t R) {
  Gallery g;
  Element c = face.chamber;
  Element upper = multiply_gen(p, c, face.s);
  if (upper.length() < c.length()) {
    g.error = "face not normalized to its lower endpoint";
    return g;
  }
  if (upper.length() > R) {
    g.error = "face outside the working ball";
    return g;
  }
  Face current = face;
  std::vector<Element> seen;
  for (;;) {
    Wall w = wall_of_edge(p, current.chamber, current.s);
    if (!col.set.find(w.reflection)) {
      g.error = "face wall missing from the coloring";
      return g;
    }
    if (std::find(seen.begin(), seen.end(), w.reflection) != seen.end()) {
      g.error = "gallery revisited a wall";
      return g;
    }
    seen.push_back(w.reflection);
    g.faces.push_back(current);
    if (c.is_identity()) break;
    std::vector<Gen> down = descent_set(p, c);
    Gen t = *std::min_element(down.begin(), down.end());
    Element next = multiply_gen(p, c, t);
    current = Face{next, t};
    c = next;
  }
  g.ok = true;
  return g;
}

std::vector<Element> translation_symmetries(const Presentation& p,
                                            const WallColoring& col,
                                            std::size_t r_small) {
  std::vector<Element> out;
  Ball small = ball(p, r_small);
  for (const Element& g : small.elements) {
    bool preserves = true;
    std::size_t budget = col.radius >= g.length() ? col.radius - g.length() : 0;
    for (std::size_t i = 0; preserves && i < col.size(); ++i) {
      const Wall& w = col.set.walls[i];
      if (multiply_gen(p, w.witness, w.s).length() > budget) continue;
      Element moved = reduce(p, [&] {
        Word word = g.word();
        word.insert(word.end(), w.reflection.word().begin(),
                    w.reflection.word().end());
        Word ginv(g.word().rbegin(), g.word().rend());
        word.insert(word.end(), ginv.begin(), ginv.end());
        return word;
      }());
      const Wall* target = col.set.find(moved);
      if (!target) {
        preserves = false;
        break;
      }
      std::size_t j = std::size_t(target - col.set.walls.data());
      if (col.phi_id[i] != col.phi_id[j] ||
          col.decoration[i] != col.decoration[j])
        preserves = false;
    }
    if (preserves) out.push_back(g);
  }
  return out;
}

std::string walls_csv(const Presentation& p, const WallColoring& col,
                      const Orientation& o) {
  std::vector<std::size_t> levels = wall_levels(p, col);
  std::ostringstream out;
  out << "key,s_color,phi,decoration,level,sign\n";
  for (std::size_t i = 0; i < col.size(); ++i) {
    const Wall& w = col.set.walls[i];
    out << p.format_word(w.reflection.word()) << ',' << (w.s_color + 1) << ','
        << col.phi_id[i] << ',' << col.decoration[i] << ',' << levels[i] << ','
        << (o[i] > 0 ? '+' : '-') << '\n';
  }
  return out.str();
}

}  // namespace racg
