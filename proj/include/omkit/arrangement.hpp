#pragma once

// Affine hyperplane arrangements with exact rational data: face enumeration
// by sign-vector feasibility, the geometric composition/restriction of faces,
// and the construction families used by the catalog.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omkit/chirotope.hpp"
#include "omkit/oriented_matroid.hpp"
#include "omkit/rational.hpp"
#include "omkit/sign_vector.hpp"

namespace omkit {

/// The locus normal . x = offset; the positive side is normal . x > offset.
struct Hyperplane {
  RationalVector normal;
  Rational offset;

  Sign side(const RationalVector& point) const { return sign_of(dot(normal, point) - offset); }

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

class RationalArrangement {
 public:
  static constexpr int kMaxDimension = 4;

  /// Throws dimension_error for d outside [1, 4] or mismatched normals and
  /// std::invalid_argument for a zero normal, an empty list or two
  /// hyperplanes with the same point set.
  RationalArrangement(int dimension, std::vector<Hyperplane> hyperplanes);

  int dimension() const noexcept { return d_; }
  int size() const noexcept { return static_cast<int>(planes_.size()); }
  const std::vector<Hyperplane>& hyperplanes() const noexcept { return planes_; }
  const Hyperplane& operator[](int i) const { return planes_.at(static_cast<std::size_t>(i)); }

  /// Linear-algebra rank of the normal vectors.
  int rank() const;
  /// All hyperplanes share a point.
  bool is_central() const;
  /// All hyperplanes pass through the origin.
  bool is_linear() const;

  SignVector covector_of(const RationalVector& point) const;

  friend bool operator==(const RationalArrangement&, const RationalArrangement&) = default;

 private:
  int d_;
  std::vector<Hyperplane> planes_;
};

struct GeometricFace {
  SignVector covector;
  int dimension = 0;
  bool bounded = false;
  /// A point in the relative interior, chosen deterministically.
  RationalVector witness;
};

/// Exact test of whether some point realizes the sign vector.
bool sign_feasible(const RationalArrangement& a, const SignVector& sigma);

/// Face with the given covector. Throws domain_error if it is not a face.
GeometricFace face_of(const RationalArrangement& a, const SignVector& sigma);

/// All faces, sorted by covector. Throws resource_error beyond 12 hyperplanes.
std::vector<GeometricFace> faces(const RationalArrangement& a);

std::vector<SignVector> face_covectors(const std::vector<GeometricFace>& fs);

/// One-sided limit along the segment from a witness of X towards a witness of Y.
GeometricFace geometric_compose(const RationalArrangement& a, const GeometricFace& x, const GeometricFace& y);

/// Faces of `a` inside restriction(X, Y). Requires X, Y separated by some
/// hyperplane and Y on every hyperplane containing X; domain_error otherwise.
std::vector<GeometricFace> geometric_restrict(const RationalArrangement& a, const GeometricFace& x,
                                              const GeometricFace& y);

/// Lift to d+1: hyperplane i becomes normal_i . x - offset_i * t = 0 and a new
/// last hyperplane t = 0 is appended, positive for t > 0. Throws
/// dimension_error when d + 1 exceeds the supported dimension.
RationalArrangement cone(const RationalArrangement& a);

/// Extend a line arrangement along the z-axis.
RationalArrangement product_with_axis(const RationalArrangement& lines);

/// Append a plane to a 3-dimensional arrangement; by default z = 0, positive upward.
RationalArrangement bisect(const RationalArrangement& a, std::optional<Hyperplane> plane = std::nullopt);

/// n parallel hyperplanes x_1 = 0, 1, ..., n-1.
RationalArrangement trivial_arrangement(int n, int d);

/// Moment-curve arrangement: normal (1, t, ..., t^(d-1)), offset t^d, t = 1..n.
RationalArrangement general_position(int n, int d);

std::uint64_t binomial(int n, int k);
/// sum_{i=0}^{d} C(n, i)
std::uint64_t max_chambers(int n, int d);
/// C(n, d)
std::uint64_t max_vertices(int n, int d);

/// Normals of a central arrangement written in coordinates of their span,
/// giving a vector configuration of full rank. Throws domain_error when the
/// arrangement is not central.
VectorConfiguration normal_configuration(const RationalArrangement& a);

/// Chirotope of cone(a): the affine arrangement's oriented matroid with the
/// added hyperplane as last element.
Chirotope cone_chirotope(const RationalArrangement& a);

struct PappusConstruction {
  RationalArrangement arrangement;
  /// The three intersection points forced onto one line.
  std::vector<RationalVector> middle_points;
  Rational collinearity_determinant;
  bool on_ninth_line = false;
};

/// Nine lines: two carrier lines, the six cross joins of three points on
/// each, and the line through the three cross intersections (last).
PappusConstruction pappus();

struct GoodmanPollackConstruction {
  RationalArrangement arrangement;
  /// O, P, Q, R.
  std::vector<RationalVector> points;
  Rational coplanarity_determinant;
};

/// Eight planes: the four facets of tetrahedron OABC, the planes of
/// A'B'C, AB'C', A'BC' (primed points on the edges OA, OB, OC) and the plane
/// through O, Q, R, which then also contains P.
GoodmanPollackConstruction goodman_pollack8();

}  // namespace omkit
