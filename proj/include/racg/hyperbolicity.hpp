#pragma once

#include <cstddef>

#include "racg/group.hpp"

namespace racg {

/// Empirical thin-triangle constant: over geodesic triangles with one
/// vertex at the identity and the other two in ball(R), the largest
/// distance from a point on one side to the union of the other two
/// sides.  Left-invariance makes vertex-at-identity triangles
/// representative up to translation.  Results are cached per
/// (presentation, radius); the parallel version fans the triangle scan
/// out with OpenMP and returns the identical value.
std::size_t measure_ch_serial(const Presentation& p, std::size_t R);
std::size_t measure_ch(const Presentation& p, std::size_t R);

/// D = 2*C_h + 3, the wall-distance threshold used by the decoration.
std::size_t default_distance_D(const Presentation& p, std::size_t R);

}  // namespace racg
