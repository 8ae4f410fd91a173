#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace racg {

using Gen = std::uint8_t;
using Word = std::vector<Gen>;
using Color = int;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finitely generated right-angled Coxeter presentation: an ordered
/// generator list, a symmetric irreflexive commutation relation and a
/// proper vertex coloring of the commutation graph.
///
/// Generator order is declaration order; shortlex ties break by it.
class Presentation {
 public:
  Presentation(std::vector<std::string> names,
               std::vector<std::pair<std::string, std::string>> commuting_pairs,
               std::vector<Color> coloring);

  int rank() const { return static_cast<int>(names_.size()); }
  int num_colors() const { return num_colors_; }

  const std::string& name(Gen g) const { return names_.at(g); }
  Gen gen(const std::string& name) const;
  const std::vector<std::string>& names() const { return names_; }

  bool commutes(Gen s, Gen t) const {
    return (commute_mask_[s] >> t) & 1u;
  }
  std::uint32_t commute_mask(Gen s) const { return commute_mask_[s]; }

  Color color(Gen g) const { return colors_[g]; }  // 0-based
  const std::vector<Gen>& generators_of_color(Color c) const {
    return color_classes_.at(c);
  }

  Word parse_word(const std::vector<std::string>& letters) const;
  std::string format_word(const Word& w) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::uint32_t> commute_mask_;
  std::vector<Color> colors_;
  std::vector<std::vector<Gen>> color_classes_;
  int num_colors_ = 0;
};

// Small built-in presentations used throughout tests and docs.
Presentation hexagon_group();     // 6-cycle nerve, 2-colored, hyperbolic
Presentation pentagon_group();    // 5-cycle nerve, 3-colored, hyperbolic
Presentation four_cycle_group();  // 4-cycle nerve: the nerve is a square

}  // namespace racg
