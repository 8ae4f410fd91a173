#include "racg/presentation.hpp"

#include <algorithm>
#include <unordered_map>

namespace racg {

Presentation::Presentation(
    std::vector<std::string> names,
    std::vector<std::pair<std::string, std::string>> commuting_pairs,
    std::vector<Color> coloring)
    : names_(std::move(names)), colors_(std::move(coloring)) {
  const int n = static_cast<int>(names_.size());
  if (n == 0) throw InvalidInput("presentation needs at least one generator");
  if (n > 32) throw InvalidInput("at most 32 generators supported");
  {
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidInput("duplicate generator name");
  }
  if (static_cast<int>(colors_.size()) != n)
    throw InvalidInput("coloring must assign a color to every generator");

  commute_mask_.assign(n, 0);
  for (const auto& [a, b] : commuting_pairs) {
    Gen s = gen(a), t = gen(b);
    if (s == t) throw InvalidInput("self-pair in commuting_pairs: " + a);
    commute_mask_[s] |= (1u << t);
    commute_mask_[t] |= (1u << s);
  }

  num_colors_ = 0;
  for (Color c : colors_) {
    if (c < 0) throw InvalidInput("negative color index");
    num_colors_ = std::max(num_colors_, c + 1);
  }
  color_classes_.assign(num_colors_, {});
  for (int g = 0; g < n; ++g) color_classes_[colors_[g]].push_back(Gen(g));
  for (const auto& cls : color_classes_)
    if (cls.empty()) throw InvalidInput("unused color index in coloring");

  // Same-color generators never commute in a right-angled Coxeter group.
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (colors_[s] == colors_[t] && commutes(Gen(s), Gen(t)))
        throw InvalidInput("generators " + names_[s] + ", " + names_[t] +
                           " commute but share a color");
}

Gen Presentation::gen(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return Gen(i);
  throw InvalidInput("unknown generator identifier: " + name);
}

Word Presentation::parse_word(const std::vector<std::string>& letters) const {
  Word w;
  w.reserve(letters.size());
  for (const auto& l : letters) w.push_back(gen(l));
  return w;
}

std::string Presentation::format_word(const Word& w) const {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += name(w[i]);
  }
  return out;
}

namespace {

Presentation cycle_group(int p) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 1; i <= p; ++i) names.push_back("s" + std::to_string(i));
  for (int i = 0; i < p; ++i)
    pairs.emplace_back(names[i], names[(i + 1) % p]);
  std::vector<Color> colors(p);
  if (p % 2 == 0) {
    for (int i = 0; i < p; ++i) colors[i] = i % 2;
  } else {
    // Odd cycle: alternate and give the closing vertex its own color.
    for (int i = 0; i < p - 1; ++i) colors[i] = i % 2;
    colors[p - 1] = 2;
  }
  return Presentation(std::move(names), std::move(pairs), std::move(colors));
}

}  // namespace

Presentation hexagon_group() { return cycle_group(6); }
Presentation pentagon_group() { return cycle_group(5); }
Presentation four_cycle_group() { return cycle_group(4); }

}  // namespace racg
