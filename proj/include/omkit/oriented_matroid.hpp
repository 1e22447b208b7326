#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "omkit/sign_vector.hpp"

namespace omkit {

/// A finite set of equal-length sign vectors, stored sorted and deduplicated.
class CovectorSet {
 public:
  CovectorSet(int ground_size, std::vector<SignVector> vectors);

  int ground_size() const noexcept { return n_; }
  const std::vector<SignVector>& vectors() const noexcept { return vectors_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  bool contains(const SignVector& x) const;

  friend bool operator==(const CovectorSet&, const CovectorSet&) = default;

 private:
  int n_;
  std::vector<SignVector> vectors_;
};

struct AxiomResult {
  bool pass = true;
  /// First violation in lexicographic order: one vector for SV0/SV1, an
  /// ordered pair (X, Y) for SV2/SV3. Empty iff pass.
  std::vector<SignVector> witness;
};

struct AxiomReport {
  AxiomResult sv0, sv1, sv2, sv3;
  bool ok() const noexcept { return sv0.pass && sv1.pass && sv2.pass && sv3.pass; }
};

/// Brute-force check of the covector axioms:
///   SV0  the zero vector is present;
///   SV1  closed under negation;
///   SV2  closed under composition;
///   SV3  if supp(Y) is contained in supp(X) and X, Y are separated by some
///        element, then restriction(X, Y) meets the set.
AxiomReport check_axioms(const CovectorSet& v);

/// Elements that are zero in every vector.
std::vector<int> loops(const CovectorSet& v);

/// Pairs i < j whose columns are equal on every vector or opposite on every vector.
std::vector<std::pair<int, int>> parallel_pairs(const CovectorSet& v);

/// Number of strict steps in a longest chain of (V, leq).
int rank(std::span<const SignVector> vectors);
inline int rank(const CovectorSet& v) { return rank(v.vectors()); }

class AffineOrientedMatroid {
 public:
  /// Throws std::invalid_argument when `om` fails an axiom and
  /// invalid_marking_error when `marked` is out of range or a loop.
  AffineOrientedMatroid(CovectorSet om, int marked);

  const CovectorSet& om() const noexcept { return om_; }
  int marked() const noexcept { return marked_; }

  /// rank(om) - 1: the dimension of the affine arrangement it models.
  int affine_rank() const { return rank(om_) - 1; }

 private:
  CovectorSet om_;
  int marked_;
};

/// Vectors positive on the marked element. The marked entry is kept; it is
/// constant on the result, so it does not affect the order.
std::vector<SignVector> affine_faces(const AffineOrientedMatroid& a);

/// Hasse diagram of (V, leq).
struct FacePoset {
  std::vector<SignVector> elements;
  /// Covering pairs (lower, upper) as indices into `elements`.
  std::vector<std::pair<int, int>> covers;
  std::vector<std::vector<int>> lower_covers;
  std::vector<std::vector<int>> upper_covers;

  std::vector<int> maximal() const;
  std::vector<int> minimal() const;
};

FacePoset face_poset(std::span<const SignVector> vectors);

}  // namespace omkit
