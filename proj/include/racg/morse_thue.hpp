#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "racg/normal_form.hpp"

namespace racg {

/// Bit i of the Morse-Thue sequence (parity of popcount of i).
int mt(std::uint64_t i);

/// First n bits.
std::vector<std::uint8_t> mt_prefix(std::size_t n);

struct CubeViolation {
  std::size_t offset = 0;
  std::vector<std::uint8_t> block;
};

/// First occurrence of WWW in the sequence, if any.  Block length is
/// capped at |seq|/3 (longer blocks cannot repeat three times).  The
/// parallel version returns the same first-in-scan-order result.
std::optional<CubeViolation> find_cube(const std::vector<std::uint8_t>& seq);
std::optional<CubeViolation> find_cube_parallel(
    const std::vector<std::uint8_t>& seq);

/// Decorate a canonical representation: for every color other than the
/// base, the i-th letter of that color (0-based, in word order) gets
/// Morse-Thue bit t(i).  Base-color letters stay undecorated.
ARepresentation decorate(const Presentation& p, const ARepresentation& rep);

}  // namespace racg
