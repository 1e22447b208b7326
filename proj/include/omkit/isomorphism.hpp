#pragma once

// Face-combinatorial equivalence. Canonical forms are lexicographic minima
// over the signed-permutation group (sign order '0' < '+' < '-'); the
// fingerprint is a cheap invariant used only to prove inequivalence.

#include <optional>
#include <string>
#include <vector>

#include "omkit/arrangement.hpp"
#include "omkit/chirotope.hpp"
#include "omkit/oriented_matroid.hpp"
#include "omkit/sign_vector.hpp"

namespace omkit {

/// Exhaustive covector canonicalization is limited to this many elements.
inline constexpr int kMaxCanonicalElements = 8;

struct CanonicalForm {
  int ground_size = 0;
  /// Affine forms put the marked element last; -1 for plain forms.
  int marked = -1;
  /// Sorted image of the covector list under `certificate`.
  std::vector<SignVector> vectors;
  SignedPermutation certificate;

  /// "n=<n>[ g=<n>]:" followed by the vectors separated by spaces.
  std::string key() const;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.ground_size == b.ground_size && a.marked == b.marked && a.vectors == b.vectors;
  }
};

/// Minimum over all 2^n n! signed permutations of the sorted image list.
/// Throws resource_error above kMaxCanonicalElements.
CanonicalForm canonicalize(const CovectorSet& v);

/// Minimum over the signed permutations sending the marked element to the
/// last position, with all reorientations.
CanonicalForm canonicalize_affine(const AffineOrientedMatroid& a);

/// Canonical chirotope up to relabeling, reorientation and global sign:
/// the least value sequence over sorted tuples in colexicographic order.
struct ChirotopeForm {
  int ground_size = 0;
  int rank = 0;
  int marked = -1;
  std::string values;
  SignedPermutation certificate;
  bool negated = false;

  std::string key() const;
  /// The canonical chirotope itself.
  Chirotope chirotope() const;

  friend bool operator==(const ChirotopeForm& a, const ChirotopeForm& b) {
    return a.ground_size == b.ground_size && a.rank == b.rank && a.marked == b.marked && a.values == b.values;
  }
};

/// With `marked`, only relabelings sending it to the last position count.
ChirotopeForm canonicalize_chirotope(const Chirotope& chi, std::optional<int> marked = std::nullopt);

struct ChamberShape {
  int facets = 0;
  int vertices = 0;
  bool bounded = false;
  /// Number of faces of each dimension 0..d-1 on the chamber's boundary.
  std::vector<int> face_vector;

  friend auto operator<=>(const ChamberShape&, const ChamberShape&) = default;
};

struct Fingerprint {
  int dimension = 0;
  int rank = 0;
  std::vector<int> faces_by_dimension;
  std::vector<int> bounded_by_dimension;
  /// Sorted.
  std::vector<ChamberShape> chambers;
  /// Per hyperplane: faces of each dimension lying on it. Sorted.
  std::vector<std::vector<int>> incidence;

  int points() const { return faces_by_dimension.empty() ? 0 : faces_by_dimension[0]; }
  /// Unbounded 1-dimensional faces.
  int rays() const;
  int bounded_chambers() const;

  /// Stable one-line text.
  std::string str() const;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const std::vector<GeometricFace>& faces, int dimension);

/// Shapes of the faces below each chamber, in face order (chambers only).
std::vector<ChamberShape> chamber_shapes(const std::vector<GeometricFace>& faces, int dimension);

/// Name for a chamber shape: "triangle", "quadrilateral", "tetrahedron",
/// "square pyramid", "triangular prism", ... or a generic description.
std::string shape_name(const ChamberShape& shape, int dimension);

struct Equivalence {
  bool equivalent = false;
  std::string reason;
};

/// Arrangements are compared as affine arrangements (through their cones with
/// the added hyperplane marked) unless `affine` is false and both are
/// central, in which case their face sets are compared as oriented matroids.
Equivalence are_equivalent(const RationalArrangement& a, const RationalArrangement& b, bool affine = true);

Equivalence are_equivalent(const CovectorSet& a, const CovectorSet& b);
Equivalence are_equivalent(const AffineOrientedMatroid& a, const AffineOrientedMatroid& b);

}  // namespace omkit
