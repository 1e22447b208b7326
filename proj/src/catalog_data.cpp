// Frozen coordinates found by tools/catalog_search.cpp (small integer data,
// one representative per affine class).

#include "catalog_data.hpp"

namespace omkit::detail {

const std::vector<std::string>& five_line_classes() {
  static const std::vector<std::string> lines = {
      "2 -1 | 0; 1 -1 | 0; 1 0 | 0; 0 1 | 0; 1 2 | 0",
      "0 1 | -1; 1 -1 | 0; 1 1 | 0; 2 1 | -1; 2 0 | 1",
      "0 1 | 0; 2 -1 | 1; 1 1 | 1; 1 -1 | 0; 1 0 | -1",
      "1 -1 | 0; 2 -1 | 0; 1 1 | 1; 0 1 | 1; 1 0 | -1",
      "0 1 | -1; 1 -1 | -2; 1 2 | 0; 1 0 | 1; 1 -2 | 0",
      "0 1 | -1; 2 -1 | 0; 2 1 | 0; 1 0 | 1; 1 -1 | 1",
      "0 1 | -2; 2 -1 | 1; 1 1 | 0; 1 -1 | -1; 1 0 | 0",
      "0 2 | -1; 1 0 | 0; 0 1 | 0; 0 1 | 1; 0 1 | -1",
      "0 1 | 0; 0 1 | 1; 1 0 | 0; 1 1 | 0; 2 1 | 0",
      "1 -1 | -1; 0 1 | 0; 1 0 | 0; 1 0 | -1; 1 -1 | 0",
      "1 -1 | 0; 0 1 | -2; 0 1 | -1; 1 0 | 0; 0 1 | 0",
      "1 0 | -1; 1 1 | 0; 1 0 | 1; 1 0 | 0; 0 1 | 0",
      "0 1 | 0; 1 0 | 1; 1 1 | 0; 0 1 | -1; 1 -1 | 1",
      "0 1 | 0; 1 0 | 0; 1 -1 | 0; 1 -2 | 0; 1 1 | -1",
      "0 1 | -1; 1 1 | 1; 0 1 | 0; 1 -1 | 1; 1 0 | 0",
      "0 1 | 0; 0 1 | -1; 1 0 | -1; 1 0 | 0; 0 1 | 1",
      "0 1 | 0; 1 0 | -1; 1 0 | 1; 0 1 | -1; 1 -1 | 0",
      "0 1 | 0; 1 0 | 1; 1 0 | 0; 0 1 | 1; 1 1 | 0",
      "1 -1 | -1; 0 1 | 1; 1 0 | 0; 1 -2 | 0; 1 1 | 0",
      "1 -2 | 0; 1 1 | 1; 1 -1 | 0; 1 0 | 1; 0 1 | 0",
      "0 1 | -1; 1 0 | -1; 1 -1 | 0; 1 1 | 0; 2 1 | 0",
      "0 1 | -1; 1 2 | 0; 0 1 | 1; 0 1 | 0; 1 0 | 1",
      "0 1 | -1; 0 1 | 1; 0 1 | 0; 1 1 | 0; 1 0 | -2",
      "0 1 | -2; 0 1 | 0; 1 -1 | 1; 1 1 | 0; 1 0 | -1",
      "1 0 | -1; 1 1 | 0; 0 1 | 0; 1 0 | 0; 2 -1 | -1",
      "0 1 | 2; 1 0 | 0; 0 1 | -1; 1 -1 | 0; 1 1 | 0",
      "0 1 | 1; 1 0 | 0; 1 0 | 1; 1 1 | 0; 2 -1 | 0",
      "0 1 | 1; 1 1 | 0; 1 0 | -2; 1 -1 | 0; 0 1 | 0",
      "0 1 | 1; 1 -1 | 0; 1 1 | -1; 1 0 | 1; 0 1 | 0",
      "1 0 | -2; 1 0 | -1; 0 1 | 0; 1 -1 | 0; 1 1 | 0",
      "1 -1 | -1; 0 1 | 0; 1 0 | 1; 1 1 | 0; 1 0 | 0",
      "0 1 | -1; 1 -1 | 0; 1 0 | -2; 0 1 | 0; 2 0 | -1",
      "0 1 | -1; 0 1 | 0; 1 -1 | 0; 1 0 | -2; 1 0 | 1",
      "1 0 | -1; 0 1 | 0; 1 1 | 1; 0 1 | -1; 1 0 | 0",
      "1 1 | 0; 1 -1 | -1; 2 1 | -1; 1 0 | 0; 0 1 | 0",
      "0 1 | -1; 1 1 | 0; 1 -1 | -1; 2 -1 | -1; 1 0 | 0",
      "0 1 | 0; 1 0 | 0; 1 2 | -1; 1 -1 | 1; 2 -1 | 0",
      "0 1 | -1; 1 -2 | 0; 2 1 | 1; 1 0 | 1; 1 -1 | 0",
      "0 1 | -1; 1 -1 | 0; 2 0 | -1; 2 1 | 0; 1 1 | 0",
      "0 1 | 1; 1 1 | -1; 2 1 | 0; 1 0 | 0; 1 -1 | 0",
      "0 1 | 0; 0 1 | -1; 1 -2 | 0; 1 0 | 1; 1 1 | -1",
      "0 1 | -1; 1 1 | 0; 0 1 | 1; 2 -1 | 2; 1 0 | 0",
      "0 1 | 2; 1 0 | 0; 1 -1 | -1; 0 1 | -1; 1 1 | 0",
      "0 1 | -1; 0 1 | 0; 1 -1 | -1; 1 0 | 1; 1 2 | 0",
      "0 1 | -1; 0 1 | -2; 1 0 | 0; 1 1 | 1; 1 -1 | 0",
      "0 1 | 0; 0 1 | -1; 1 0 | -2; 1 1 | 1; 1 -1 | 0",
  };
  return lines;
}

const std::vector<std::string>& four_line_classes() {
  static const std::vector<std::string> lines = {
      "0 1 | 0; 0 1 | 2; 1 1 | 2; 1 -1 | 0",
      "0 1 | 0; 0 1 | 2; 1 1 | 6; 1 -1 | 0",
      "1 0 | 0; 0 1 | 0; 1 1 | 2; 1 -1 | 1",
      "1 0 | 0; 0 1 | 0; 1 1 | 0; 1 -1 | 0",
      "1 0 | 0; 1 0 | 1; 0 1 | 0; 0 1 | 1",
      "0 1 | 0; 0 1 | 1; 0 1 | 2; 1 0 | 0",
      "1 0 | 0; 0 1 | 0; 1 -1 | 0; 1 1 | 1",
      "1 0 | 0; 0 1 | 0; 1 -1 | 0; 1 0 | 1",
  };
  return lines;
}

const std::vector<std::pair<std::string, std::string>>& bounded_five_plane_classes() {
  static const std::vector<std::pair<std::string, std::string>> planes = {
      {"fig11-tetrahedron-rays18", "0 0 1 | 0; 0 1 1 | 0; 1 0 0 | 1; 1 1 0 | 0; 1 0 0 | 0"},
      {"fig11-tetrahedron-rays16", "0 0 1 | -1; 1 0 0 | 0; 0 1 -1 | 0; 0 1 0 | 0; 1 -1 0 | 0"},
      {"fig11-square-pyramid", "0 0 1 | 0; 1 0 0 | -1; 1 -1 0 | 0; 0 1 0 | 0; 1 0 1 | 0"},
      {"fig11-prism", "0 0 1 | -1; 0 1 0 | -1; 0 0 1 | 0; 1 0 0 | 0; 1 -1 0 | 0"},
      {"fig12-two-tetrahedra-points6", "0 0 1 | 0; 1 0 0 | 0; 0 1 0 | 0; 1 1 -1 | 0; 1 0 1 | -1"},
      {"fig12-two-tetrahedra-points7", "0 0 1 | -1; 0 1 0 | 0; 1 0 0 | 0; 0 0 1 | 1; 1 1 -1 | 0"},
      {"fig12-two-tetrahedra-points5", "0 0 1 | 0; 0 1 0 | 0; 1 0 0 | 0; 1 1 1 | 1; 1 -1 0 | 0"},
      {"fig12-tetrahedron-prism-points8", "0 0 1 | 0; 1 0 -1 | -1; 1 0 0 | 1; 0 1 0 | 0; 1 -1 0 | 0"},
      {"fig12-tetrahedron-prism-points7", "0 0 1 | -1; 0 0 1 | 0; 1 -1 0 | 0; 1 0 1 | 0; 0 1 0 | -1"},
      {"fig12-pyramid-tetrahedron", "0 0 1 | 0; 1 0 1 | -1; 1 -1 0 | 0; 0 1 0 | 0; 1 0 -1 | 0"},
      {"fig12-two-prisms", "0 0 1 | -1; 1 0 0 | 0; 0 1 0 | 0; 1 -1 0 | -1; 0 1 -1 | 0"},
      {"fig13-two-tetrahedra-prism", "0 0 1 | -1; 1 -1 0 | 0; 1 0 0 | 0; 0 1 1 | 1; 0 1 -1 | 0"},
      {"fig13-two-tetrahedra-pyramid", "0 0 1 | 0; 0 1 0 | 0; 1 -1 -1 | 0; 1 0 1 | 0; 1 1 0 | -1"},
      {"fig13-two-prisms-tetrahedron", "0 0 1 | -1; 0 1 0 | 0; 1 0 1 | 0; 1 -1 0 | -1; 0 1 -1 | 0"},
  };
  return planes;
}

}  // namespace omkit::detail
