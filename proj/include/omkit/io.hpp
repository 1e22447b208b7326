#pragma once

// Text formats. Blank lines and '#' comments are ignored everywhere.
//   arrangement: "d=<int>", then "<a1> ... <ad> | <b>" per hyperplane
//   covectors:   "n=<int>", then one sign string per line (a set)
//   chirotope:   "m=<int> r=<int>", then C(m, r) signs on one line
// Parsing throws parse_error carrying the offending line number.

#include <string>
#include <string_view>

#include "omkit/arrangement.hpp"
#include "omkit/chirotope.hpp"
#include "omkit/oriented_matroid.hpp"

namespace omkit {

RationalArrangement parse_arrangement(std::string_view text);
std::string format_arrangement(const RationalArrangement& a);

CovectorSet parse_covectors(std::string_view text);
/// Vectors in the set's stored (sorted) order.
std::string format_covectors(const CovectorSet& v);

Chirotope parse_chirotope(std::string_view text);
std::string format_chirotope(const Chirotope& chi);

/// Whole file as a string; std::runtime_error if it cannot be read.
std::string read_file(const std::string& path);

/// Lines clipped to a box around the vertices (d = 2 only). Floating point
/// is used for drawing and nothing else.
std::string export_svg(const RationalArrangement& a);

/// Wavefront OBJ: one object per plane, clipped to a box around the vertices
/// (d = 3 only).
std::string export_scene(const RationalArrangement& a);

}  // namespace omkit
