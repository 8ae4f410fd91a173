#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "racg/presentation.hpp"

namespace racg {

/// A group element held in shortlex normal form.  Two elements are equal
/// iff their normal words are equal, so Element works as a map key.
class Element {
 public:
  Element() = default;
  explicit Element(Word normal) : normal_(std::move(normal)) {}

  const Word& word() const { return normal_; }
  std::size_t length() const { return normal_.size(); }
  bool is_identity() const { return normal_.empty(); }

  friend bool operator==(const Element& a, const Element& b) {
    return a.normal_ == b.normal_;
  }
  friend bool operator!=(const Element& a, const Element& b) {
    return !(a == b);
  }
  // Shortlex order: length first, then letter order.
  friend bool operator<(const Element& a, const Element& b) {
    if (a.normal_.size() != b.normal_.size())
      return a.normal_.size() < b.normal_.size();
    return a.normal_ < b.normal_;
  }

 private:
  Word normal_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const {
    std::size_t h = 1469598103934665603ull;
    for (Gen g : e.word()) {
      h ^= g;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Shortlex normal form: first reduce to a geodesic word (cancel letter
/// pairs whose gap commutes with them, per the deletion condition), then
/// take the lexicographically least word reachable by commutation moves.
Element reduce(const Presentation& p, const Word& w);
bool is_normal(const Presentation& p, const Word& w);

Element multiply(const Presentation& p, const Element& a, const Element& b);
Element multiply_gen(const Presentation& p, const Element& a, Gen s);
Element invert(const Presentation& p, const Element& a);
Element conjugate(const Presentation& p, const Element& g, const Element& x);

std::size_t length(const Element& a);
std::size_t color_length(const Presentation& p, const Element& a, Color c);
std::size_t distance(const Presentation& p, const Element& a, const Element& b);

/// Generators s with l(a s) < l(a).  These pairwise commute.
std::vector<Gen> descent_set(const Presentation& p, const Element& a);

/// A geodesic a = g_0, ..., g_k = b with d(g_i, g_j) = |i - j|.
std::vector<Element> geodesic(const Presentation& p, const Element& a,
                              const Element& b);

/// The tripod point of {a, b, c}: lies between each pair.  Computed by
/// removing local norm maxima from a geodesic between two of the points
/// relative to the third, then taking the norm minimum.
Element median(const Presentation& p, const Element& a, const Element& b,
               const Element& c);

struct Ball {
  std::vector<Element> elements;        // sorted shortlex
  std::vector<std::size_t> sphere_sizes;  // sphere_sizes[r] = |S(r)|
  std::size_t radius = 0;

  bool contains(const Element& e) const;
  std::size_t index_of(const Element& e) const;  // position in `elements`
};

/// All elements of length <= R, shortlex sorted.  `budget` bounds the
/// element count.  The parallel version expands BFS fronts with OpenMP
/// and produces the identical, order-stable result.
Ball ball_serial(const Presentation& p, std::size_t R,
                 std::size_t budget = 5'000'000);
Ball ball(const Presentation& p, std::size_t R,
          std::size_t budget = 5'000'000);

Element identity();
Element from_letters(const Presentation& p,
                     std::initializer_list<const char*> letters);

}  // namespace racg
