#pragma once

// Frozen coordinate data behind the catalog. Each string lists hyperplanes as
// "<a1> ... <ad> | <b>" separated by ';'.

#include <string>
#include <utility>
#include <vector>

namespace omkit::detail {

/// The nontrivial four-line classes, in catalog order (fig3-class1..8).
const std::vector<std::string>& four_line_classes();

/// One arrangement per rank-2 affine class of five lines.
const std::vector<std::string>& five_line_classes();

/// Rank-3 five-plane classes with bounded chambers other than general
/// position, keyed by catalog name.
const std::vector<std::pair<std::string, std::string>>& bounded_five_plane_classes();

}  // namespace omkit::detail
