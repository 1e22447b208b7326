#pragma once

// Named arrangements for the figures, with the counts stated for them, and
// the verification run over the whole collection.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omkit/arrangement.hpp"

namespace omkit {

struct ExpectedFacts {
  std::optional<int> points;
  /// Unbounded 1-dimensional faces.
  std::optional<int> rays;
  std::optional<int> chambers;
  std::optional<int> bounded_chambers;
  std::optional<int> bounded_edges;
  /// Names of the bounded chambers' shapes, sorted.
  std::optional<std::vector<std::string>> bounded_shapes;
};

struct CatalogEntry {
  std::string name;
  /// "Fig. 3" and so on; empty for entries that only complete a count.
  std::string figure;
  std::string description;
  RationalArrangement arrangement;
  ExpectedFacts expected;
};

/// Every entry, in a fixed order. Built on first use.
const std::vector<CatalogEntry>& catalog();

/// nullptr when there is no entry of that name.
const CatalogEntry* find_entry(std::string_view name);

/// Entries whose name starts with `prefix`, in catalog order.
std::vector<const CatalogEntry*> entries_with_prefix(std::string_view prefix);

/// Canonical chirotope key of the cone with the added hyperplane marked:
/// equal keys mean equivalent affine arrangements, in any dimension.
std::string affine_class_key(const RationalArrangement& a);

struct CatalogCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CatalogReport {
  std::vector<CatalogCheck> checks;
  bool ok() const;
  /// One "PASS <name>: <detail>" or "FAIL <name>: <detail>" line per check.
  std::string str() const;
};

/// Per-entry expected facts, then the figure-level counts and the
/// comparison of the five-hyperplane entries with the enumerated classes.
CatalogReport catalog_verify();

}  // namespace omkit
