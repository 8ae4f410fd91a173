#include "racg/group.hpp"

#include <algorithm>
#include <cassert>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace racg {

namespace {

// Append one letter to a geodesic word, keeping it geodesic.  By the
// deletion condition, l(ws) < l(w) exactly when w has a letter equal to s
// that commutes with everything to its right; then the pair cancels.
void append_geodesic(const Presentation& p, Word& w, Gen s) {
  for (std::size_t j = w.size(); j-- > 0;) {
    if (w[j] == s) {
      w.erase(w.begin() + j);
      return;
    }
    if (!p.commutes(w[j], s)) break;
  }
  w.push_back(s);
}

// Lexicographically least word obtainable from a geodesic word by
// commutation moves.  All geodesic words for a fixed element differ by
// such moves only, so this is the shortlex normal form.  Greedy: the
// least letter that commutes past everything before it comes out first.
Word straighten(const Presentation& p, Word w) {
  Word out;
  out.reserve(w.size());
  while (!w.empty()) {
    std::size_t best = 0;
    std::uint32_t blocked = 0;  // generators that cannot move to the front
    Gen best_gen = w[0];
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0 && !((blocked >> w[i]) & 1u) && w[i] < best_gen) {
        best = i;
        best_gen = w[i];
      }
      blocked |= ~p.commute_mask(w[i]);
    }
    out.push_back(best_gen);
    w.erase(w.begin() + best);
  }
  return out;
}

}  // namespace

Element reduce(const Presentation& p, const Word& w) {
  Word geo;
  geo.reserve(w.size());
  for (Gen g : w) {
    if (g >= p.rank()) throw InvalidInput("letter outside generator range");
    append_geodesic(p, geo, g);
  }
  return Element(straighten(p, std::move(geo)));
}

bool is_normal(const Presentation& p, const Word& w) {
  return reduce(p, w).word() == w;
}

Element multiply(const Presentation& p, const Element& a, const Element& b) {
  Word w = a.word();
  w.insert(w.end(), b.word().begin(), b.word().end());
  return reduce(p, w);
}

Element multiply_gen(const Presentation& p, const Element& a, Gen s) {
  Word w = a.word();
  w.push_back(s);
  return reduce(p, w);
}

Element invert(const Presentation& p, const Element& a) {
  Word w(a.word().rbegin(), a.word().rend());
  return reduce(p, w);
}

Element conjugate(const Presentation& p, const Element& g, const Element& x) {
  Word w(g.word());
  w.insert(w.end(), x.word().begin(), x.word().end());
  w.insert(w.end(), g.word().rbegin(), g.word().rend());
  return reduce(p, w);
}

std::size_t length(const Element& a) { return a.length(); }

std::size_t color_length(const Presentation& p, const Element& a, Color c) {
  if (c < 0 || c >= p.num_colors()) throw InvalidInput("unknown color index");
  std::size_t n = 0;
  for (Gen g : a.word())
    if (p.color(g) == c) ++n;
  return n;
}

std::size_t distance(const Presentation& p, const Element& a,
                     const Element& b) {
  Word w(a.word().rbegin(), a.word().rend());
  w.insert(w.end(), b.word().begin(), b.word().end());
  return reduce(p, w).length();
}

std::vector<Gen> descent_set(const Presentation& p, const Element& a) {
  std::vector<Gen> out;
  for (int g = 0; g < p.rank(); ++g)
    if (multiply_gen(p, a, Gen(g)).length() < a.length()) out.push_back(Gen(g));
  return out;
}

std::vector<Element> geodesic(const Presentation& p, const Element& a,
                              const Element& b) {
  std::vector<Element> path{a};
  Element cur = a;
  std::size_t d = distance(p, cur, b);
  while (d > 0) {
    for (int g = 0; g < p.rank(); ++g) {
      Element next = multiply_gen(p, cur, Gen(g));
      std::size_t nd = distance(p, next, b);
      if (nd < d) {
        cur = std::move(next);
        d = nd;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

Element median(const Presentation& p, const Element& a, const Element& b,
               const Element& c) {
  // Translate so the third point is the identity; norms along an a-b
  // geodesic then read distances to c.
  Element ci = invert(p, c);
  Element x = multiply(p, ci, a);
  Element y = multiply(p, ci, b);
  std::vector<Element> path = geodesic(p, x, y);

  // Remove local norm maxima: at a peak the two neighbors differ from
  // the peak by commuting generators, so the peak can be replaced by the
  // fourth corner of the square, lowering the norm by two.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      std::size_t n0 = path[i - 1].length(), n1 = path[i].length(),
                  n2 = path[i + 1].length();
      if (n1 > n0 && n1 > n2) {
        Element inv = invert(p, path[i]);
        Element s = multiply(p, inv, path[i - 1]);
        Element t = multiply(p, inv, path[i + 1]);
        assert(s.length() == 1 && t.length() == 1);
        Element corner = multiply(p, multiply(p, path[i], s), t);
        path[i] = corner;
        changed = true;
      }
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < path.size(); ++i)
    if (path[i].length() < path[best].length()) best = i;
  return multiply(p, c, path[best]);
}

bool Ball::contains(const Element& e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

std::size_t Ball::index_of(const Element& e) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), e);
  if (it == elements.end() || !(*it == e))
    throw InvalidInput("element not in ball");
  return static_cast<std::size_t>(it - elements.begin());
}

namespace {

Ball ball_impl(const Presentation& p, std::size_t R, std::size_t budget,
               bool parallel) {
  Ball out;
  out.radius = R;
  std::vector<Element> sphere{identity()};
  out.elements.push_back(identity());
  out.sphere_sizes.push_back(1);

  for (std::size_t r = 0; r < R; ++r) {
    std::vector<Element> next;
    const int n = static_cast<int>(sphere.size());
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel
      {
        std::vector<Element> local;
#pragma omp for schedule(static) nowait
        for (int i = 0; i < n; ++i) {
          for (int g = 0; g < p.rank(); ++g) {
            Element e = multiply_gen(p, sphere[i], Gen(g));
            if (e.length() == r + 1) local.push_back(std::move(e));
          }
        }
#pragma omp critical
        next.insert(next.end(), std::make_move_iterator(local.begin()),
                    std::make_move_iterator(local.end()));
      }
#else
      parallel = false;
#endif
    }
    if (!parallel) {
      for (int i = 0; i < n; ++i)
        for (int g = 0; g < p.rank(); ++g) {
          Element e = multiply_gen(p, sphere[i], Gen(g));
          if (e.length() == r + 1) next.push_back(std::move(e));
        }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (out.elements.size() + next.size() > budget)
      throw ResourceError("ball element budget exceeded");
    out.sphere_sizes.push_back(next.size());
    out.elements.insert(out.elements.end(), next.begin(), next.end());
    sphere = std::move(next);
    if (sphere.empty()) break;
  }
  // Spheres were appended in radius order and each sphere is sorted, so
  // the whole list is already shortlex sorted.
  return out;
}

}  // namespace

Ball ball_serial(const Presentation& p, std::size_t R, std::size_t budget) {
  return ball_impl(p, R, budget, false);
}

Ball ball(const Presentation& p, std::size_t R, std::size_t budget) {
  return ball_impl(p, R, budget, true);
}

Element identity() { return Element(); }

Element from_letters(const Presentation& p,
                     std::initializer_list<const char*> letters) {
  Word w;
  for (const char* l : letters) w.push_back(p.gen(l));
  return reduce(p, w);
}

}  // namespace racg
