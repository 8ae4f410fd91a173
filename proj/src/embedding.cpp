#include "racg/embedding.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <random>
#include <sstream>

namespace racg {

namespace {

// The alphabet letters of a representation interleaved with base-color
// markers, in word order.
std::vector<DiarySymbol> alphabet_stream(const ARepresentation& rep) {
  std::vector<DiarySymbol> out;
  for (std::size_t i = 0; i < rep.coeffs.size(); ++i) {
    for (const SimplexLetter& s : rep.coeffs[i]) {
      DiarySymbol d;
      d.kind = DiarySymbol::Simplex;
      d.simp = s;
      out.push_back(std::move(d));
    }
    if (i < rep.a_letters.size()) {
      DiarySymbol d;
      d.kind = DiarySymbol::ALetter;
      d.g = rep.a_letters[i];
      out.push_back(std::move(d));
    }
  }
  return out;
}

// Writing the diary is a stack process: push the letters appearing since
// the previous page, then tear off the top kappa for the new page.
DiaryPath diary_of_rep(const ARepresentation& rep, int kappa) {
  DiaryPath path;
  std::vector<DiarySymbol> stack;
  std::vector<DiarySymbol> stream = alphabet_stream(rep);
  std::size_t next = 0;
  for (std::size_t i = 0; i < rep.r(); ++i) {
    // push the previous base letter (if any) and the coefficient W_i
    std::size_t count = (i > 0 ? 1 : 0) + rep.coeffs[i].size();
    for (std::size_t c = 0; c < count; ++c) stack.push_back(stream[next++]);

    DiaryEntry e;
    std::size_t take = std::min<std::size_t>(kappa, stack.size());
    e.slots.assign(kappa - take, DiarySymbol{});  // left padding
    e.slots.insert(e.slots.end(), stack.end() - take, stack.end());
    stack.resize(stack.size() - take);
    path.push_back(std::move(e));
  }
  return path;
}

ARepresentation rep_for(const Presentation& p, const Element& g, Color a,
                        bool decorated) {
  ARepresentation rep = canonical_a_representation(p, g, a);
  return decorated ? decorate(p, rep) : rep;
}

}  // namespace

DiaryPath diary_map(const Presentation& p, const Element& g, Color a,
                    int kappa, bool decorated) {
  if (kappa < 1) throw InvalidInput("kappa must be >= 1");
  return diary_of_rep(rep_for(p, g, a, decorated), kappa);
}

AugmentedPath augmented_diary(const Presentation& p, const Element& g, Color a,
                              int kappa, bool decorated) {
  if (kappa < 1) throw InvalidInput("kappa must be >= 1");
  ARepresentation rep = rep_for(p, g, a, decorated);
  DiaryPath plain = diary_of_rep(rep, kappa);
  AugmentedPath out;
  for (std::size_t i = 0; i < plain.size(); ++i)
    out.push_back(AugmentedLabel{std::move(plain[i]), rep.a_letters[i]});
  return out;
}

std::size_t ProductPoint::norm() const {
  std::size_t n = 0;
  for (const auto& c : components) n += c.size();
  return n;
}

ProductPoint psi(const Presentation& p, const Element& g, int kappa) {
  ProductPoint out;
  for (Color c = 0; c < p.num_colors(); ++c)
    out.components.push_back(augmented_diary(p, g, c, kappa, true));
  return out;
}

std::size_t product_distance(const ProductPoint& x, const ProductPoint& y) {
  if (x.components.size() != y.components.size())
    throw InvalidInput("points from different products");
  std::size_t d = 0;
  for (std::size_t c = 0; c < x.components.size(); ++c)
    d += tree_distance(x.components[c], y.components[c]);
  return d;
}

namespace {

// Decoder stack tokens.  HIDDEN(q) stands for the not-yet-revealed part
// of coefficient W_{j+q}; MARKER(q) for the base letter a_{j+q}.
struct Token {
  enum Kind { Abyss, Marker, Hidden } kind;
  std::size_t q = 0;
  Gen g = 0;
};

}  // namespace

Reconstruction reconstruct_cut(const Presentation& p,
                               const AugmentedPath& window, int kappa) {
  (void)p;
  if (window.empty()) throw InvalidInput("empty reconstruction window");
  for (const auto& lab : window)
    if (static_cast<int>(lab.entry.slots.size()) != kappa)
      throw InvalidInput("window entries disagree with kappa");

  std::vector<Token> stack{Token{Token::Abyss, 0, 0}};
  std::vector<std::vector<DiarySymbol>> learned(window.size());
  std::vector<bool> full(window.size(), false);

  for (std::size_t t = 0; t < window.size(); ++t) {
    if (t > 0) stack.push_back(Token{Token::Marker, t - 1, window[t - 1].a});
    stack.push_back(Token{Token::Hidden, t, 0});

    const auto& slots = window[t].entry.slots;
    for (std::size_t s = slots.size(); s-- > 0;) {
      const DiarySymbol& sym = slots[s];
      bool placed = false;
      while (!placed) {
        Token& top = stack.back();
        switch (top.kind) {
          case Token::Hidden:
            if (sym.kind == DiarySymbol::Simplex) {
              learned[top.q].insert(learned[top.q].begin(), sym);
              placed = true;
            } else {
              full[top.q] = true;  // coefficient exhausted under this pop
              stack.pop_back();
            }
            break;
          case Token::Marker:
            if (sym.kind == DiarySymbol::ALetter && sym.g == top.g) {
              stack.pop_back();
              placed = true;
            } else {
              throw InvalidInput("inconsistent diary window");
            }
            break;
          case Token::Abyss:
            // content from before the window; nothing to learn
            placed = true;
            break;
        }
      }
    }
  }

  Reconstruction out;
  out.full = full[0];
  out.letters = std::move(learned[0]);
  out.a_j = window[0].a;
  return out;
}

DistortionReport distortion_report(const Presentation& p, std::size_t R,
                                   int kappa, std::size_t sample_size,
                                   std::uint64_t seed) {
  DistortionReport rep;
  rep.radius = R;
  rep.kappa = kappa;
  rep.seed = seed;

  Ball B = ball(p, R);
  std::vector<ProductPoint> images;
  images.reserve(B.elements.size());
  for (const Element& e : B.elements) images.push_back(psi(p, e, kappa));

  // injectivity: identical images must mean identical elements
  rep.injective = true;
  {
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < images.size() && rep.injective; ++i) {
      std::ostringstream key;
      for (const auto& comp : images[i].components) {
        for (const auto& lab : comp) {
          key << int(lab.a) << ':';
          for (const auto& sym : lab.entry.slots) {
            key << sym.kind << ',';
            if (sym.kind == DiarySymbol::ALetter) key << int(sym.g);
            if (sym.kind == DiarySymbol::Simplex) {
              for (std::size_t v = 0; v < sym.simp.verts.size(); ++v)
                key << int(sym.simp.verts[v]) << '^'
                    << (sym.simp.decor.empty() ? -1 : sym.simp.decor[v]);
            }
            key << ';';
          }
          key << '|';
        }
        key << '/';
      }
      auto [it, inserted] = seen.emplace(key.str(), i);
      if (!inserted) rep.injective = false;
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, B.elements.size() - 1);
  rep.samples = sample_size;
  rep.min_dt_per_d.assign(2 * R + 1, SIZE_MAX);
  for (std::size_t it = 0; it < sample_size; ++it) {
    std::size_t i = pick(rng), j = pick(rng);
    std::size_t d = distance(p, B.elements[i], B.elements[j]);
    std::size_t dt = product_distance(images[i], images[j]);
    rep.pairs.emplace_back(d, dt);
    if (d < rep.min_dt_per_d.size())
      rep.min_dt_per_d[d] = std::min(rep.min_dt_per_d[d], dt);
    if (dt > 0) {
      double ratio = double(d) / double(dt);
      rep.max_ratio = std::max(rep.max_ratio, ratio);
      std::size_t bucket = std::size_t(ratio);
      if (rep.ratio_histogram.size() <= bucket)
        rep.ratio_histogram.resize(bucket + 1, 0);
      ++rep.ratio_histogram[bucket];
    }
  }
  for (auto& v : rep.min_dt_per_d)
    if (v == SIZE_MAX) v = 0;  // distance not sampled
  return rep;
}

std::string distortion_report_json(const DistortionReport& r) {
  nlohmann::json j;
  j["radius"] = r.radius;
  j["kappa"] = r.kappa;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["injective"] = r.injective;
  j["max_ratio"] = r.max_ratio;
  j["min_tree_distance_per_distance"] = r.min_dt_per_d;
  j["ratio_histogram"] = r.ratio_histogram;
  return j.dump(2);
}

std::string distortion_csv(const DistortionReport& r) {
  std::ostringstream out;
  out << "d,d_T\n";
  for (const auto& [d, dt] : r.pairs) out << d << ',' << dt << '\n';
  return out.str();
}

PeriodicRecord periodic_counterexample(const Presentation& p, const Word& bbar,
                                       const Word& abar, int k, int kappa) {
  if (bbar.empty() || abar.empty()) throw InvalidInput("empty words");
  if (bbar.front() == bbar.back())
    throw InvalidInput("first and last letter of the b-word must differ");
  Color a = p.color(abar.front()), b = p.color(bbar.front());
  if (a == b) throw InvalidInput("the two words must use different colors");
  for (Gen g : abar)
    if (p.color(g) != a) throw InvalidInput("a-word mixes colors");
  for (Gen g : bbar)
    if (p.color(g) != b) throw InvalidInput("b-word mixes colors");
  if (reduce(p, bbar).length() != bbar.size() ||
      reduce(p, abar).length() != abar.size())
    throw InvalidInput("input words must be reduced");

  auto power_word = [&](int reps) {
    Word w;
    for (int i = 0; i < reps; ++i) w.insert(w.end(), bbar.begin(), bbar.end());
    w.insert(w.end(), abar.begin(), abar.end());
    return reduce(p, w);
  };
  Element g1 = power_word(k), g2 = power_word(k + 1);

  PeriodicRecord rec;
  rec.d = distance(p, g1, g2);
  rec.undecorated_diary_distance = 0;
  for (Color c = 0; c < p.num_colors(); ++c)
    rec.undecorated_diary_distance +=
        tree_distance(diary_map(p, g1, c, kappa, false),
                      diary_map(p, g2, c, kappa, false));
  rec.decorated_psi_distance =
      product_distance(psi(p, g1, kappa), psi(p, g2, kappa));
  return rec;
}

}  // namespace racg
