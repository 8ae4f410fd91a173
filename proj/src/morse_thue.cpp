#include "racg/morse_thue.hpp"

#include <bit>

namespace racg {

int mt(std::uint64_t i) { return std::popcount(i) & 1; }

std::vector<std::uint8_t> mt_prefix(std::size_t n) {
  std::vector<std::uint8_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::uint8_t(mt(i));
  return out;
}

namespace {

// Cube with block length L at offset i <=> the 2L characters starting at
// i repeat at i+L.  The inner comparison exits on the first mismatch,
// which for cube-free input happens almost immediately.
bool cube_at(const std::vector<std::uint8_t>& s, std::size_t i, std::size_t L) {
  for (std::size_t m = 0; m < 2 * L; ++m)
    if (s[i + m] != s[i + L + m]) return false;
  return true;
}

}  // namespace

std::optional<CubeViolation> find_cube(const std::vector<std::uint8_t>& seq) {
  const std::size_t n = seq.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t L = 1; i + 3 * L <= n; ++L)
      if (cube_at(seq, i, L)) {
        CubeViolation v;
        v.offset = i;
        v.block.assign(seq.begin() + i, seq.begin() + i + L);
        return v;
      }
  return std::nullopt;
}

std::optional<CubeViolation> find_cube_parallel(
    const std::vector<std::uint8_t>& seq) {
  const std::size_t n = seq.size();
  std::size_t best_i = n, best_L = 0;
#ifdef _OPENMP
#pragma omp parallel
  {
    std::size_t loc_i = n, loc_L = 0;
#pragma omp for schedule(dynamic, 64) nowait
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      if (static_cast<std::size_t>(i) >= loc_i) continue;
      for (std::size_t L = 1; i + 3 * L <= n; ++L)
        if (cube_at(seq, i, L)) {
          loc_i = i;
          loc_L = L;
          break;
        }
    }
#pragma omp critical
    if (loc_i < best_i || (loc_i == best_i && loc_L < best_L && loc_L != 0)) {
      best_i = loc_i;
      best_L = loc_L;
    }
  }
#else
  return find_cube(seq);
#endif
  if (best_i == n) return std::nullopt;
  // smallest block length at the first offset, matching the serial scan
  for (std::size_t L = 1; best_i + 3 * L <= n; ++L)
    if (cube_at(seq, best_i, L)) {
      best_L = L;
      break;
    }
  CubeViolation v;
  v.offset = best_i;
  v.block.assign(seq.begin() + best_i, seq.begin() + best_i + best_L);
  return v;
}

ARepresentation decorate(const Presentation& p, const ARepresentation& rep) {
  ARepresentation out = rep;
  std::vector<std::uint64_t> counter(p.num_colors(), 0);
  for (auto& coeff : out.coeffs)
    for (SimplexLetter& s : coeff) {
      s.decor.assign(s.verts.size(), 0);
      for (std::size_t v = 0; v < s.verts.size(); ++v)
        s.decor[v] = mt(counter[p.color(s.verts[v])]++);
    }
  return out;
}

}  // namespace racg
