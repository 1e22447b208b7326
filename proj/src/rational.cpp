#include "omkit/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <utility>

#include "omkit/errors.hpp"

namespace omkit {

Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const bool ok = slash == std::string_view::npos
                      ? digits(body)
                      : digits(body.substr(0, slash)) && digits(body.substr(slash + 1));
  if (!ok) throw parse_error("malformed rational '" + std::string(text) + "'");

  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(mpz_class(s, 10));
  } else {
    const auto cut = s.find('/');
    mpz_class den(s.substr(cut + 1), 10);
    if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    q = Rational(mpz_class(s.substr(0, cut), 10), den);
    q.canonicalize();
  }
  return q;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw dimension_error("dot: vectors of different length");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

int matrix_rank(RationalMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows.size(); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    const RationalVector& p = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / p[c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * p[k];
    }
    ++rank;
  }
  return rank;
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw dimension_error("determinant: matrix is not square");
  }
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

namespace {

bool is_strict(Relation r) { return r == Relation::Gt; }

// Holds for 0 (rel) rhs?
bool constant_holds(Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::Eq:
      return rhs == 0;
    case Relation::Ge:
      return rhs <= 0;
    case Relation::Gt:
      return rhs < 0;
  }
  return false;
}

// Inequality store keyed by the normalized coefficient vector; keeps only the
// strongest right-hand side per direction.
class InequalitySet {
 public:
  // Returns false when a constant constraint is violated.
  bool add(RationalVector coeffs, Rational rhs, Relation rel) {
    const auto lead = std::find_if(coeffs.begin(), coeffs.end(), [](const Rational& q) { return q != 0; });
    if (lead == coeffs.end()) return constant_holds(rel, rhs);
    const Rational scale = abs(*lead);
    if (scale != 1) {
      for (auto& q : coeffs) q /= scale;
      rhs /= scale;
    }
    auto [it, inserted] = store_.try_emplace(std::move(coeffs), rhs, rel);
    if (!inserted) {
      auto& [old_rhs, old_rel] = it->second;
      if (rhs > old_rhs || (rhs == old_rhs && is_strict(rel))) {
        old_rhs = rhs;
        old_rel = rel;
      }
    }
    return true;
  }

  std::vector<LinearConstraint> take() const {
    std::vector<LinearConstraint> out;
    out.reserve(store_.size());
    for (const auto& [coeffs, bound] : store_) out.push_back({coeffs, bound.first, bound.second});
    return out;
  }

 private:
  std::map<RationalVector, std::pair<Rational, Relation>> store_;
};

struct Substitution {
  int var;
  RationalVector coeffs;  // x_var = constant + coeffs . x
  Rational constant;
};

}  // namespace

std::optional<RationalVector> find_feasible_point(int dim, const std::vector<LinearConstraint>& system) {
  for (const auto& c : system) {
    if (static_cast<int>(c.coeffs.size()) != dim) throw dimension_error("constraint has wrong number of coefficients");
  }

  // Equalities first: solve for one variable and substitute it everywhere.
  std::vector<LinearConstraint> rest;
  std::vector<LinearConstraint> equalities;
  for (const auto& c : system) (c.rel == Relation::Eq ? equalities : rest).push_back(c);

  std::vector<Substitution> subs;
  std::vector<bool> eliminated(static_cast<std::size_t>(dim), false);
  auto substitute = [](LinearConstraint& c, const Substitution& s) {
    const Rational a = c.coeffs[static_cast<std::size_t>(s.var)];
    if (a == 0) return;
    c.coeffs[static_cast<std::size_t>(s.var)] = 0;
    for (std::size_t j = 0; j < c.coeffs.size(); ++j) c.coeffs[j] += a * s.coeffs[j];
    c.rhs -= a * s.constant;
  };

  for (std::size_t e = 0; e < equalities.size(); ++e) {
    const LinearConstraint& eq = equalities[e];
    int var = -1;
    for (int j = 0; j < dim; ++j) {
      if (eq.coeffs[static_cast<std::size_t>(j)] != 0) {
        var = j;
        break;
      }
    }
    if (var < 0) {
      if (eq.rhs != 0) return std::nullopt;
      continue;
    }
    const Rational a = eq.coeffs[static_cast<std::size_t>(var)];
    Substitution s{var, RationalVector(static_cast<std::size_t>(dim), Rational(0)), eq.rhs / a};
    for (int j = 0; j < dim; ++j) {
      if (j != var) s.coeffs[static_cast<std::size_t>(j)] = -eq.coeffs[static_cast<std::size_t>(j)] / a;
    }
    for (std::size_t f = e + 1; f < equalities.size(); ++f) substitute(equalities[f], s);
    for (auto& c : rest) substitute(c, s);
    eliminated[static_cast<std::size_t>(var)] = true;
    subs.push_back(std::move(s));
  }

  // Fourier-Motzkin on the remaining free variables.
  InequalitySet initial;
  for (auto& c : rest) {
    if (!initial.add(std::move(c.coeffs), std::move(c.rhs), c.rel)) return std::nullopt;
  }
  std::vector<LinearConstraint> current = initial.take();

  std::vector<int> free_vars;
  for (int j = 0; j < dim; ++j) {
    if (!eliminated[static_cast<std::size_t>(j)]) free_vars.push_back(j);
  }

  struct Level {
    int var;
    std::vector<LinearConstraint> constraints;
  };
  std::vector<Level> levels;

  while (!free_vars.empty()) {
    // Eliminate the variable with the fewest generated pairs.
    std::size_t best = 0;
    long best_cost = std::numeric_limits<long>::max();
    for (std::size_t k = 0; k < free_vars.size(); ++k) {
      long pos = 0;
      long neg = 0;
      for (const auto& c : current) {
        const int s = sgn(c.coeffs[static_cast<std::size_t>(free_vars[k])]);
        pos += s > 0;
        neg += s < 0;
      }
      const long cost = pos * neg - pos - neg;
      if (cost < best_cost) {
        best_cost = cost;
        best = k;
      }
    }
    const int v = free_vars[best];
    free_vars.erase(free_vars.begin() + static_cast<long>(best));
    const auto vi = static_cast<std::size_t>(v);

    InequalitySet next;
    std::vector<const LinearConstraint*> lower;
    std::vector<const LinearConstraint*> upper;
    for (const auto& c : current) {
      const int s = sgn(c.coeffs[vi]);
      if (s > 0) {
        lower.push_back(&c);
      } else if (s < 0) {
        upper.push_back(&c);
      } else if (!next.add(c.coeffs, c.rhs, c.rel)) {
        return std::nullopt;
      }
    }
    for (const auto* lo : lower) {
      for (const auto* up : upper) {
        const Rational wl = -up->coeffs[vi];
        const Rational wu = lo->coeffs[vi];
        RationalVector coeffs(static_cast<std::size_t>(dim));
        for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] = wl * lo->coeffs[j] + wu * up->coeffs[j];
        coeffs[vi] = 0;
        const Relation rel = is_strict(lo->rel) || is_strict(up->rel) ? Relation::Gt : Relation::Ge;
        if (!next.add(std::move(coeffs), wl * lo->rhs + wu * up->rhs, rel)) return std::nullopt;
      }
    }
    levels.push_back({v, std::move(current)});
    current = next.take();
  }
  // Everything left is constant and was checked on insertion.

  RationalVector x(static_cast<std::size_t>(dim), Rational(0));
  for (auto level = levels.rbegin(); level != levels.rend(); ++level) {
    const auto vi = static_cast<std::size_t>(level->var);
    std::optional<std::pair<Rational, bool>> lo;
    std::optional<std::pair<Rational, bool>> hi;
    for (const auto& c : level->constraints) {
      const Rational& a = c.coeffs[vi];
      if (a == 0) continue;
      Rational rest_value = 0;
      for (std::size_t j = 0; j < c.coeffs.size(); ++j) {
        if (j != vi && c.coeffs[j] != 0) rest_value += c.coeffs[j] * x[j];
      }
      const Rational bound = (c.rhs - rest_value) / a;
      const bool strict = is_strict(c.rel);
      if (a > 0) {
        if (!lo || bound > lo->first || (bound == lo->first && strict)) lo = std::make_pair(bound, strict);
      } else {
        if (!hi || bound < hi->first || (bound == hi->first && strict)) hi = std::make_pair(bound, strict);
      }
    }
    if (lo && hi) {
      x[vi] = lo->first == hi->first ? lo->first : (lo->first + hi->first) / 2;
    } else if (lo) {
      x[vi] = lo->first + 1;
    } else if (hi) {
      x[vi] = hi->first - 1;
    } else {
      x[vi] = 0;
    }
  }
  for (auto s = subs.rbegin(); s != subs.rend(); ++s) {
    Rational value = s->constant;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (s->coeffs[j] != 0) value += s->coeffs[j] * x[j];
    }
    x[static_cast<std::size_t>(s->var)] = value;
  }
  return x;
}

}  // namespace omkit
