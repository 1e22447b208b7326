#pragma once

// Chirotopes: alternating sign maps on r-tuples of a ground set of size m.
// Only sorted tuples are stored; any other ordering is evaluated through the
// parity of its sorting permutation.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "omkit/oriented_matroid.hpp"
#include "omkit/rational.hpp"
#include "omkit/sign_vector.hpp"

namespace omkit {

/// Sorted r-subsets of {0..m-1}, as bit masks, in lexicographic order.
std::vector<std::uint32_t> subsets_lex(int m, int r);

class Chirotope {
 public:
  static constexpr int kMaxGround = 16;

  /// `signs` lists the values of the sorted r-tuples in lexicographic order.
  Chirotope(int ground_size, int rank, std::span<const Sign> signs);

  int ground_size() const noexcept { return m_; }
  int rank() const noexcept { return r_; }

  /// Value on an ordered tuple; repeated elements give zero.
  Sign operator()(std::span<const int> tuple) const;
  /// Value on the sorted tuple with the given element mask.
  Sign at_mask(std::uint32_t mask) const noexcept { return static_cast<Sign>(by_mask_[mask]); }

  /// Values in lexicographic order of sorted tuples.
  std::vector<Sign> signs() const;
  /// One character per sorted tuple, lexicographic order.
  std::string str() const;

  Chirotope negated() const;
  /// The chirotope of the relabeled/reoriented configuration: tuple images
  /// under g carry the original value times the reorientation signs.
  Chirotope transformed(const SignedPermutation& g) const;

  /// Values indexed by tuple mask (2^m entries; entries whose popcount is
  /// not r must be zero).
  static Chirotope from_mask_values(int ground_size, int rank, std::vector<std::int8_t> by_mask);
  const std::vector<std::int8_t>& mask_values() const noexcept { return by_mask_; }

  friend bool operator==(const Chirotope&, const Chirotope&) = default;

 private:
  Chirotope(int m, int r);

  int m_;
  int r_;
  std::vector<std::int8_t> by_mask_;
};

/// Sign of the permutation sorting `tuple`, zero if an element repeats.
Sign tuple_parity(std::span<const int> tuple);

/// m vectors in r-space with exact coordinates.
struct VectorConfiguration {
  int rank = 0;
  std::vector<RationalVector> vectors;
};

/// Sign of det for every sorted r-tuple. Throws rank_deficient_error when the
/// vectors do not span r-space and std::invalid_argument on a zero vector.
Chirotope chirotope_from_vectors(const VectorConfiguration& config);

struct ChirotopeCheck {
  bool ok = true;
  /// On failure: the ordered tuples x and y violating exchange, or empty
  /// when the map is identically zero.
  std::vector<int> x;
  std::vector<int> y;
  std::string reason;
};

/// Brute-force chirotope axioms: not identically zero, and for all ordered x,
/// y with chi(x) chi(y) != 0 some i has
///   chi(y_i, x_2..x_r) * chi(y_1..y_{i-1}, x_1, y_{i+1}..y_r) = chi(x) chi(y).
/// Alternation holds by construction of the storage.
ChirotopeCheck check_chirotope(const Chirotope& chi);

/// Minimal-support nonzero covectors: for every independent (r-1)-subset A,
/// the vector e -> chi(A, e), with its negative. Sorted and deduplicated.
std::vector<SignVector> cocircuits(const Chirotope& chi);

/// Closure of the cocircuits and the zero vector under composition.
CovectorSet covectors(const Chirotope& chi);

}  // namespace omkit
