#include "racg/hyperbolicity.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace racg {

namespace {

std::size_t side_gap(const Presentation& p, const std::vector<Element>& side,
                     const std::vector<Element>& other1,
                     const std::vector<Element>& other2) {
  std::size_t worst = 0;
  for (const Element& x : side) {
    std::size_t best = SIZE_MAX;
    for (const Element& y : other1) best = std::min(best, distance(p, x, y));
    for (const Element& y : other2) best = std::min(best, distance(p, x, y));
    worst = std::max(worst, best);
  }
  return worst;
}

std::size_t triangle_constant(const Presentation& p, const Element& a,
                              const Element& b) {
  Element e = identity();
  std::vector<Element> ea = geodesic(p, e, a);
  std::vector<Element> eb = geodesic(p, e, b);
  std::vector<Element> ab = geodesic(p, a, b);
  std::size_t c = side_gap(p, ea, eb, ab);
  c = std::max(c, side_gap(p, eb, ea, ab));
  return std::max(c, side_gap(p, ab, ea, eb));
}

std::string cache_key(const Presentation& p, std::size_t R) {
  std::ostringstream key;
  for (const std::string& n : p.names()) key << n << ';';
  for (Gen s = 0; s < Gen(p.rank()); ++s) key << p.commute_mask(s) << ';';
  key << '@' << R;
  return key.str();
}

std::mutex cache_mutex;
std::map<std::string, std::size_t> cache;

template <bool Parallel>
std::size_t measure(const Presentation& p, std::size_t R) {
  std::string key = cache_key(p, R);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Ball B = ball(p, R);
  const std::ptrdiff_t n = std::ptrdiff_t(B.elements.size());
  std::size_t worst = 0;
#pragma omp parallel for schedule(dynamic) reduction(max : worst) if (Parallel)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    for (std::ptrdiff_t j = i; j < n; ++j)
      worst = std::max(
          worst, triangle_constant(p, B.elements[i], B.elements[j]));
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(key, worst);
  return worst;
}

}  // namespace

std::size_t measure_ch_serial(const Presentation& p, std::size_t R) {
  return measure<false>(p, R);
}

std::size_t measure_ch(const Presentation& p, std::size_t R) {
  return measure<true>(p, R);
}

std::size_t default_distance_D(const Presentation& p, std::size_t R) {
  return 2 * measure_ch(p, R) + 3;
}

}  // namespace racg
