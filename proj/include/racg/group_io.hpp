#pragma once

#include <string>

#include "racg/presentation.hpp"

namespace racg {

/// Parse a group definition:
///   {"generators": ["s1", ...],
///    "commuting_pairs": [["s1","s2"], ...],
///    "coloring": {"s1": 1, ...}}        // optional, colors 1-based
/// When no coloring is given a minimum proper coloring is computed.
/// Malformed input raises InvalidInput with a line/column diagnostic.
Presentation parse_group_json(const std::string& text);
Presentation load_group_file(const std::string& path);

/// Nerve analysis record:
///   {"hyperbolic": bool, "square_witness": [..]|null,
///    "chromatic_number": n, "coloring": {...}, "coloring_exact": bool}
std::string nerve_analysis_json(const Presentation& p);

}  // namespace racg
