#pragma once

// Exact rational arithmetic (GMP) and the small amount of linear algebra the
// geometry needs: rank, determinants and a Fourier-Motzkin feasibility
// solver that handles strict inequalities.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omkit/sign_vector.hpp"

namespace omkit {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Integers "7", "-3" or fractions "p/q". Throws parse_error.
Rational parse_rational(std::string_view text);
/// Canonical text: "p" or "p/q" in lowest terms.
std::string format_rational(const Rational& q);

inline Sign sign_of(const Rational& q) {
  const int s = sgn(q);
  return s > 0 ? Sign::Plus : (s < 0 ? Sign::Minus : Sign::Zero);
}

Rational dot(const RationalVector& a, const RationalVector& b);

/// Rank over the rationals of a list of row vectors.
int matrix_rank(RationalMatrix rows);

/// Determinant of a square matrix (fraction-free elimination).
Rational determinant(RationalMatrix m);

enum class Relation { Eq, Ge, Gt };

/// coeffs . x  (=, >=, >)  rhs
struct LinearConstraint {
  RationalVector coeffs;
  Rational rhs;
  Relation rel = Relation::Ge;
};

/// Decides feasibility of a mixed system of equalities, non-strict and strict
/// inequalities in `dim` variables by equality substitution followed by
/// Fourier-Motzkin elimination. On success returns a deterministic witness
/// point: midpoints of the back-substituted bound intervals, so strict
/// constraints hold strictly.
std::optional<RationalVector> find_feasible_point(int dim, const std::vector<LinearConstraint>& system);

inline bool is_feasible(int dim, const std::vector<LinearConstraint>& system) {
  return find_feasible_point(dim, system).has_value();
}

}  // namespace omkit
