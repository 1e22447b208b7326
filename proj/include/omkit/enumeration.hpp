#pragma once

// Isomorphism classes of simple oriented matroids (no loops, no parallel
// elements) built by repeated single-element extension of chirotopes, their
// affine classes by marking, and the class-count census.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omkit/chirotope.hpp"

namespace omkit {

struct OMClass {
  /// Canonical representative (see canonicalize_chirotope).
  Chirotope chirotope;
  std::string key;
};

struct AffineClass {
  /// Canonical representative with the marked element last.
  Chirotope chirotope;
  std::string key;
};

/// Every simple chirotope on m + 1 elements whose deletion of the last
/// element is `parent`, one per admissible signature of the new element.
/// Results are not deduplicated.
std::vector<Chirotope> single_element_extensions(const Chirotope& parent);

/// One representative per class of simple rank-r oriented matroids on m
/// elements, sorted by key. Throws resource_error beyond m = 8 or r = 4.
std::vector<OMClass> enumerate_oms(int m, int r);

/// Affine classes with n elements and affine rank r: every marking of every
/// class from enumerate_oms(n + 1, r + 1), deduplicated.
std::vector<AffineClass> enumerate_affine(int n, int r);

struct ClassCheck {
  bool axioms = false;
  bool loop_free = false;
  bool simple = false;
  bool rank_ok = false;
  bool ok() const noexcept { return axioms && loop_free && simple && rank_ok; }
};

/// Covector-level certification of an enumerated class.
ClassCheck validate_class(const Chirotope& chi);

/// Reference class counts: r in {1, 2, 3}; r = 0 is the r <= 3 totals row.
std::optional<std::uint64_t> table1_count(int n, int r);

struct Census {
  int n_max = 0;
  /// counts[r][n] for r = 1..3 and n = 1..n_max; empty when not computed.
  std::vector<std::vector<std::optional<std::uint64_t>>> counts;

  std::optional<std::uint64_t> count(int n, int r) const;
  std::optional<std::uint64_t> total(int n) const;
  /// Cells (n, r) whose computed value differs from the reference counts; r = 0 for totals.
  std::vector<std::pair<int, int>> mismatches() const;
  /// Grid of counts (rows r = 1..3 and totals) followed by a verdict line.
  std::string str() const;
};

/// n_max <= 6 computes every cell; n_max = 7 adds the rank-2 column only.
Census census_table(int n_max);

}  // namespace omkit
