#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "racg/morse_thue.hpp"
#include "racg/normal_form.hpp"

namespace racg {

/// One slot of a diary page: empty padding, a base-color letter, or a
/// (possibly decorated) simplex letter.
struct DiarySymbol {
  enum Kind { Empty, ALetter, Simplex } kind = Empty;
  Gen g = 0;           // ALetter
  SimplexLetter simp;  // Simplex

  friend bool operator==(const DiarySymbol& x, const DiarySymbol& y) {
    if (x.kind != y.kind) return false;
    if (x.kind == ALetter) return x.g == y.g;
    if (x.kind == Simplex) return x.simp == y.simp;
    return true;
  }
  friend bool operator!=(const DiarySymbol& x, const DiarySymbol& y) {
    return !(x == y);
  }
};

/// A diary page: exactly kappa slots, oldest first; empty slots only as
/// a left prefix.
struct DiaryEntry {
  std::vector<DiarySymbol> slots;
  friend bool operator==(const DiaryEntry& a, const DiaryEntry& b) {
    return a.slots == b.slots;
  }
  friend bool operator!=(const DiaryEntry& a, const DiaryEntry& b) {
    return !(a == b);
  }
};

struct AugmentedLabel {
  DiaryEntry entry;
  Gen a = 0;
  friend bool operator==(const AugmentedLabel& x, const AugmentedLabel& y) {
    return x.a == y.a && x.entry == y.entry;
  }
  friend bool operator!=(const AugmentedLabel& x, const AugmentedLabel& y) {
    return !(x == y);
  }
};

using DiaryPath = std::vector<DiaryEntry>;        // vertex of the diary tree
using AugmentedPath = std::vector<AugmentedLabel>;

/// Diary of the canonical a-representation: one page per base-color
/// letter.  Page i holds the last kappa not-yet-recorded alphabet
/// letters before a_i.  `decorated` applies the Morse-Thue decoration
/// before writing.
DiaryPath diary_map(const Presentation& p, const Element& g, Color a,
                    int kappa, bool decorated = false);
AugmentedPath augmented_diary(const Presentation& p, const Element& g, Color a,
                              int kappa, bool decorated = false);

/// One decorated augmented diary per color; metric is the l1 sum.
struct ProductPoint {
  std::vector<AugmentedPath> components;
  std::size_t norm() const;
};
ProductPoint psi(const Presentation& p, const Element& g, int kappa);

template <class Path>
std::size_t tree_distance(const Path& u, const Path& v) {
  std::size_t lcp = 0;
  while (lcp < u.size() && lcp < v.size() && u[lcp] == v[lcp]) ++lcp;
  return u.size() + v.size() - 2 * lcp;
}
std::size_t product_distance(const ProductPoint& x, const ProductPoint& y);

/// Window decoder: given the augmented pages (alpha_j, a_j), ...,
/// (alpha_{j+r}, a_{j+r}) of some unknown diary, recover the coefficient
/// W_j (fully, or its rightmost part).  `letters` is the recovered
/// suffix of W_j in word order; a_j comes from the first label.
struct Reconstruction {
  bool full = false;
  std::vector<DiarySymbol> letters;
  Gen a_j = 0;
};
Reconstruction reconstruct_cut(const Presentation& p,
                               const AugmentedPath& window, int kappa);

/// Empirical quasiisometry measurement on ball(R).
struct DistortionReport {
  std::size_t radius = 0;
  int kappa = 0;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  bool injective = false;          // psi injective on the whole ball
  double max_ratio = 0.0;          // max d / d_T over sampled pairs
  std::vector<std::size_t> min_dt_per_d;  // index = true distance
  std::vector<std::size_t> ratio_histogram;  // bucket = floor(ratio)
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (d, d_T)
};
DistortionReport distortion_report(const Presentation& p, std::size_t R,
                                   int kappa, std::size_t sample_size,
                                   std::uint64_t seed);
std::string distortion_report_json(const DistortionReport& r);
std::string distortion_csv(const DistortionReport& r);

/// The periodic pair gamma = B^k A, gamma' = B^{k+1} A that keeps the
/// undecorated diaries close while the group distance grows.
struct PeriodicRecord {
  std::size_t d = 0;
  std::size_t undecorated_diary_distance = 0;
  std::size_t decorated_psi_distance = 0;
};
PeriodicRecord periodic_counterexample(const Presentation& p, const Word& bbar,
                                       const Word& abar, int k, int kappa);

}  // namespace racg
