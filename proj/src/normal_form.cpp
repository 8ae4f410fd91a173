#include "racg/normal_form.hpp"

#include <algorithm>

namespace racg {

Word ARepresentation::flatten() const {
  Word out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (const SimplexLetter& s : coeffs[i])
      out.insert(out.end(), s.verts.begin(), s.verts.end());
    if (i < a_letters.size()) out.push_back(a_letters[i]);
  }
  return out;
}

std::size_t ARepresentation::alphabet_length() const {
  std::size_t n = a_letters.size();
  for (const auto& c : coeffs) n += c.size();
  return n;
}

std::string ARepresentation::pretty(const Presentation& p) const {
  std::string out;
  auto sep = [&] {
    if (!out.empty()) out += ' ';
  };
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (const SimplexLetter& s : coeffs[i]) {
      sep();
      out += '[';
      for (std::size_t v = 0; v < s.verts.size(); ++v) {
        if (v) out += ' ';
        out += p.name(s.verts[v]);
        if (!s.decor.empty()) out += s.decor[v] ? "'" : "\"";
      }
      out += ']';
    }
    if (i < a_letters.size()) {
      sep();
      out += p.name(a_letters[i]);
    }
  }
  if (out.empty()) out = "e";
  return out;
}

namespace {

struct TL {
  Gen g;
  std::size_t id;
};

// Right simplex presentation of a tagged reduced word: Delta_1 = letters
// commuting with everything to their right; peel and recurse.  Result in
// word order (Delta_q ... Delta_1), vertices sorted by generator.
std::vector<std::vector<TL>> simplex_present(const Presentation& p,
                                             std::vector<TL> w) {
  std::vector<std::vector<TL>> rev;  // Delta_1 first
  while (!w.empty()) {
    std::vector<TL> delta;
    std::vector<TL> rest;
    std::uint32_t blocked = 0;  // generators not commuting with some suffix letter
    std::vector<bool> take(w.size(), false);
    for (std::size_t j = w.size(); j-- > 0;) {
      if (!((blocked >> w[j].g) & 1u)) take[j] = true;
      blocked |= ~p.commute_mask(w[j].g);
    }
    for (std::size_t j = 0; j < w.size(); ++j)
      (take[j] ? delta : rest).push_back(w[j]);
    std::sort(delta.begin(), delta.end(),
              [](const TL& a, const TL& b) { return a.g < b.g; });
    rev.push_back(std::move(delta));
    w = std::move(rest);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

struct TaggedRep {
  std::vector<Gen> a_letters;
  std::vector<std::size_t> a_ids;
  std::vector<std::vector<std::vector<TL>>> coeffs;  // coefficient -> simplices
};

// Canonical a-representation of a tagged reduced word.  Letters that can
// pass their following base-color letter (commute with it and with the
// coefficient remainder to their right, i.e. are descents of the
// coefficient) jump right until the left-a condition holds.
TaggedRep canonical_tagged(const Presentation& p, const Word& w, Color a) {
  std::vector<std::vector<TL>> coeff(1);
  TaggedRep rep;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (p.color(w[i]) == a) {
      rep.a_letters.push_back(w[i]);
      rep.a_ids.push_back(i);
      coeff.emplace_back();
    } else {
      coeff.back().push_back(TL{w[i], i});
    }
  }

  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < rep.a_letters.size() && !moved; ++i) {
      auto& cur = coeff[i];
      // rightmost-first scan: letter j qualifies when it commutes with
      // a_i and with every coefficient letter after it
      std::uint32_t blocked = 0;
      for (std::size_t j = cur.size(); j-- > 0;) {
        Gen x = cur[j].g;
        if (!((blocked >> x) & 1u) && p.commutes(x, rep.a_letters[i])) {
          coeff[i + 1].insert(coeff[i + 1].begin(), cur[j]);
          cur.erase(cur.begin() + j);
          moved = true;
          break;
        }
        blocked |= ~p.commute_mask(x);
      }
    }
  }

  for (auto& c : coeff) rep.coeffs.push_back(simplex_present(p, std::move(c)));
  return rep;
}

ARepresentation strip_tags(const TaggedRep& t, Color a) {
  ARepresentation rep;
  rep.base = a;
  rep.a_letters = t.a_letters;
  for (const auto& c : t.coeffs) {
    rep.coeffs.emplace_back();
    for (const auto& simp : c) {
      SimplexLetter s;
      for (const TL& l : simp) s.verts.push_back(l.g);
      rep.coeffs.back().push_back(std::move(s));
    }
  }
  return rep;
}

// perm[id] = position in the flattened canonical word.
ReductionMap tagged_phi(const TaggedRep& t, std::size_t n) {
  ReductionMap phi(n);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < t.coeffs.size(); ++i) {
    for (const auto& simp : t.coeffs[i])
      for (const TL& l : simp) phi[l.id] = pos++;
    if (i < t.a_ids.size()) phi[t.a_ids[i]] = pos++;
  }
  return phi;
}

void require_reduced(const Presentation& p, const Word& w) {
  if (reduce(p, w).length() != w.size())
    throw InvalidInput("word is not reduced");
}

}  // namespace

std::vector<SimplexLetter> right_simplex_presentation(const Presentation& p,
                                                      const Element& g) {
  std::vector<TL> w;
  for (std::size_t i = 0; i < g.word().size(); ++i)
    w.push_back(TL{g.word()[i], i});
  std::vector<SimplexLetter> out;
  for (const auto& simp : simplex_present(p, std::move(w))) {
    SimplexLetter s;
    for (const TL& l : simp) s.verts.push_back(l.g);
    out.push_back(std::move(s));
  }
  return out;
}

ARepresentation canonical_a_representation(const Presentation& p,
                                           const Element& g, Color a) {
  if (a < 0 || a >= p.num_colors()) throw InvalidInput("unknown color index");
  return strip_tags(canonical_tagged(p, g.word(), a), a);
}

ReductionMap reduction_map(const Presentation& p, const Word& w, Color a) {
  if (a < 0 || a >= p.num_colors()) throw InvalidInput("unknown color index");
  require_reduced(p, w);
  return tagged_phi(canonical_tagged(p, w, a), w.size());
}

CompositionAnalysis analyze_composition(const Presentation& p,
                                        const ARepresentation& U,
                                        const ARepresentation& V) {
  if (U.base != V.base) throw InvalidInput("mismatched base colors");
  const Color a = U.base;
  Word u = U.flatten(), v = V.flatten();
  Word uv = u;
  uv.insert(uv.end(), v.begin(), v.end());
  require_reduced(p, uv);

  CompositionAnalysis out;
  TaggedRep t = canonical_tagged(p, uv, a);
  out.W = strip_tags(t, a);
  out.phi = tagged_phi(t, uv.size());
  out.k = V.coeffs.empty() ? 0 : V.coeffs[0].size();

  const std::size_t pcount = U.r(), m = V.r();
  Word wflat = out.W.flatten();

  // flattened position of a_{p+i} in W
  auto a_pos = [&](std::size_t idx) {  // 0-based a-letter index
    std::size_t pos = 0;
    for (std::size_t i = 0; i <= idx; ++i) {
      for (const SimplexLetter& s : out.W.coeffs[i]) pos += s.verts.size();
      if (i < idx) ++pos;
    }
    return pos;
  };

  if (m >= 1) {
    std::size_t ap1 = a_pos(pcount);
    for (std::size_t id = 0; id < u.size(); ++id)
      if (out.phi[id] > ap1) out.U_R.push_back(id);

    // positions of U's free-coefficient letters inside flattened UV, and
    // of its last simplex
    std::size_t ufree_begin = 0;
    for (std::size_t i = 0; i < pcount; ++i) {
      for (const SimplexLetter& s : U.coeffs[i]) ufree_begin += s.verts.size();
      ++ufree_begin;
    }
    std::size_t ufree_len = u.size() - ufree_begin;
    std::size_t ulast_begin = u.size();
    if (!U.coeffs[pcount].empty())
      ulast_begin -= U.coeffs[pcount].back().verts.size();

    if (p.num_colors() == 2) {
      // (1): the rightmost k letters of W_{p+1} are the letters of
      // V_{p+1} in order
      std::vector<std::size_t> vp1_ids;  // ids of V_{p+1} letters in UV
      {
        std::size_t off = u.size();
        for (const SimplexLetter& s : V.coeffs[0])
          for (std::size_t j = 0; j < s.verts.size(); ++j) vp1_ids.push_back(off++);
      }
      std::size_t wl = 0;
      for (const SimplexLetter& s : out.W.coeffs[pcount]) wl += s.verts.size();
      if (wl < vp1_ids.size()) {
        out.violations.push_back("3.1(1): coefficient shorter than V_{p+1}");
      } else {
        std::size_t base = a_pos(pcount) - vp1_ids.size();
        for (std::size_t j = 0; j < vp1_ids.size(); ++j)
          if (out.phi[vp1_ids[j]] != base + j) {
            out.violations.push_back("3.1(1): V_{p+1} letters not the tail of W_{p+1}");
            break;
          }
      }
      // (2)
      if (out.k >= 1 && (!out.U_R.empty() || wflat != uv))
        out.violations.push_back("3.1(2): k>=1 but composition is not already canonical");
      // (3): U_R are the last |U_R| letters of the free coefficient
      if (!out.U_R.empty()) {
        bool tail = out.U_R.size() <= ufree_len;
        for (std::size_t j = 0; tail && j < out.U_R.size(); ++j)
          if (out.U_R[j] != u.size() - out.U_R.size() + j) tail = false;
        if (!tail)
          out.violations.push_back("3.1(3): U_R is not a tail of the free coefficient");
      }
      // (4): hyperbolicity clause
      if (m >= 2) {
        std::size_t ap2 = a_pos(pcount + 1);
        int cnt = 0;
        for (std::size_t id : out.U_R)
          if (out.phi[id] > ap2) ++cnt;
        if (cnt > 1)
          out.violations.push_back("3.1(4): two U_R letters pass a_{p+2}");
      }
    } else {
      // (1): the i-th simplex from the right of V_{p+1} lands inside the
      // i-th simplex from the right of W_{p+1}
      const auto& wp1 = out.W.coeffs[pcount];
      const auto& vp1t = t.coeffs[pcount];  // W's simplices carry the ids
      (void)vp1t;
      // collect id sets per simplex of W_{p+1}
      std::vector<std::vector<std::size_t>> wsimp_ids;
      {
        // walk tagged rep in step with out.W
        const auto& tw = t.coeffs[pcount];
        for (const auto& simp : tw) {
          std::vector<std::size_t> ids;
          for (const TL& l : simp) ids.push_back(l.id);
          std::sort(ids.begin(), ids.end());
          wsimp_ids.push_back(std::move(ids));
        }
      }
      std::vector<std::vector<std::size_t>> vsimp_ids;
      {
        std::size_t off = u.size();
        for (const SimplexLetter& s : V.coeffs[0]) {
          std::vector<std::size_t> ids;
          for (std::size_t j = 0; j < s.verts.size(); ++j) ids.push_back(off++);
          vsimp_ids.push_back(std::move(ids));
        }
      }
      if (wp1.size() < vsimp_ids.size()) {
        out.violations.push_back("4.1(1): fewer simplices in W_{p+1} than in V_{p+1}");
      } else {
        for (std::size_t i = 0; i < vsimp_ids.size(); ++i) {
          const auto& vs = vsimp_ids[vsimp_ids.size() - 1 - i];
          const auto& ws = wsimp_ids[wsimp_ids.size() - 1 - i];
          if (!std::includes(ws.begin(), ws.end(), vs.begin(), vs.end())) {
            out.violations.push_back("4.1(1): V simplex not inside matching W simplex");
            break;
          }
        }
      }
      // (2): U_R letters passing a_{p+2} come from the last simplex
      if (m >= 2) {
        std::size_t ap2 = a_pos(pcount + 1);
        for (std::size_t id : out.U_R)
          if (out.phi[id] > ap2 && id < ulast_begin) {
            out.violations.push_back("4.1(2): passing letter outside last U simplex");
            break;
          }
      }
      // (3): with V_{p+1} nonempty, U_R sits in the last simplex of U
      if (out.k >= 1) {
        for (std::size_t id : out.U_R)
          if (id < ulast_begin) {
            out.violations.push_back("4.1(3): U_R letter outside last U simplex");
            break;
          }
      }
    }
  }
  return out;
}

PrefixDifference check_prefix_difference(const Presentation& p,
                                         const Element& g, const Element& h,
                                         Color a) {
  if (g == h) throw InvalidInput("elements must be distinct");
  Element delta = median(p, identity(), g, h);
  std::size_t pc = color_length(p, delta, a);

  ARepresentation W = canonical_a_representation(p, g, a);
  ARepresentation Wb = canonical_a_representation(p, h, a);

  PrefixDifference out;
  if (W.r() <= pc || Wb.r() <= pc) return out;  // not applicable
  out.applicable = true;

  ARepresentation seg, segb;
  seg.base = segb.base = a;
  seg.coeffs.push_back(W.coeffs[pc]);
  seg.a_letters.push_back(W.a_letters[pc]);
  seg.coeffs.emplace_back();
  segb.coeffs.push_back(Wb.coeffs[pc]);
  segb.a_letters.push_back(Wb.a_letters[pc]);
  segb.coeffs.emplace_back();
  out.left = seg.pretty(p);
  out.right = segb.pretty(p);
  out.differs =
      !(W.coeffs[pc] == Wb.coeffs[pc] && W.a_letters[pc] == Wb.a_letters[pc]);
  return out;
}

std::vector<StarLetter> star_projection(const Presentation& p,
                                        const ARepresentation& rep, Color b) {
  if (b == rep.base) throw InvalidInput("projection color equals base color");
  if (b < 0 || b >= p.num_colors()) throw InvalidInput("unknown color index");
  std::vector<StarLetter> out;
  for (std::size_t i = 0; i < rep.coeffs.size(); ++i) {
    for (const SimplexLetter& s : rep.coeffs[i]) {
      StarLetter l;
      l.kind = StarLetter::Star;
      for (std::size_t v = 0; v < s.verts.size(); ++v)
        if (p.color(s.verts[v]) == b) {
          l.kind = StarLetter::BVertex;
          l.g = s.verts[v];
          l.decor = s.decor.empty() ? -1 : s.decor[v];
        }
      out.push_back(l);
    }
    if (i < rep.a_letters.size())
      out.push_back(StarLetter{StarLetter::Passthrough, rep.a_letters[i], -1});
  }
  return out;
}

}  // namespace racg
