#pragma once

// Independent oracles shared by the unit tests and the acceptance run. None
// of them goes through the canonical forms.

#include <random>
#include <vector>

#include "omkit/arrangement.hpp"
#include "omkit/sign_vector.hpp"

namespace omkit::testing {

/// Order isomorphism of two finite posets given as sets of sign vectors under
/// leq, decided by colour refinement plus individualization.
bool posets_isomorphic(const std::vector<SignVector>& a, const std::vector<SignVector>& b);

/// Same arrangement seen through x = M y + t with random invertible integer
/// M, random hyperplane order and random orientations.
RationalArrangement transformed_copy(const RationalArrangement& a, std::mt19937& gen);

/// Every d normals independent and no d + 1 hyperplanes through one point,
/// checked over all subsets by elimination.
bool in_general_position(const RationalArrangement& a);

}  // namespace omkit::testing
