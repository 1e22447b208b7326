#include "omkit/chirotope.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_set>

#include "omkit/errors.hpp"

namespace omkit {

namespace {

std::vector<int> elements_of(std::uint32_t mask) {
  std::vector<int> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

std::uint32_t mask_of(std::span<const int> tuple) {
  std::uint32_t mask = 0;
  for (int e : tuple) mask |= 1U << e;
  return mask;
}

void collect_lex(int m, int r, int start, std::uint32_t prefix, std::vector<std::uint32_t>& out) {
  if (r == 0) {
    out.push_back(prefix);
    return;
  }
  for (int e = start; e <= m - r; ++e) collect_lex(m, r - 1, e + 1, prefix | (1U << e), out);
}

}  // namespace

std::vector<std::uint32_t> subsets_lex(int m, int r) {
  std::vector<std::uint32_t> out;
  if (r >= 0 && r <= m) collect_lex(m, r, 0, 0, out);
  return out;
}

Sign tuple_parity(std::span<const int> tuple) {
  int inversions = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] == tuple[j]) return Sign::Zero;
      if (tuple[i] > tuple[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? Sign::Plus : Sign::Minus;
}

Chirotope::Chirotope(int m, int r) : m_(m), r_(r) {
  if (m < 1 || m > kMaxGround) throw dimension_error("chirotope ground size must be in [1, 16]");
  if (r < 1 || r > m) throw dimension_error("chirotope rank must be in [1, m]");
  by_mask_.assign(std::size_t{1} << m, 0);
}

Chirotope::Chirotope(int ground_size, int rank, std::span<const Sign> signs) : Chirotope(ground_size, rank) {
  const auto tuples = subsets_lex(m_, r_);
  if (signs.size() != tuples.size()) {
    throw dimension_error("chirotope needs " + std::to_string(tuples.size()) + " signs, got " +
                          std::to_string(signs.size()));
  }
  for (std::size_t k = 0; k < tuples.size(); ++k) by_mask_[tuples[k]] = static_cast<std::int8_t>(signs[k]);
}

Chirotope Chirotope::from_mask_values(int ground_size, int rank, std::vector<std::int8_t> by_mask) {
  Chirotope chi(ground_size, rank);
  if (by_mask.size() != chi.by_mask_.size()) throw dimension_error("chirotope mask table has wrong size");
  for (std::size_t mask = 0; mask < by_mask.size(); ++mask) {
    if (by_mask[mask] != 0 && std::popcount(static_cast<std::uint32_t>(mask)) != rank) {
      throw std::invalid_argument("chirotope mask table has a value off rank");
    }
  }
  chi.by_mask_ = std::move(by_mask);
  return chi;
}

Sign Chirotope::operator()(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != r_) throw dimension_error("chirotope evaluated on a tuple of wrong length");
  for (int e : tuple) {
    if (e < 0 || e >= m_) throw dimension_error("chirotope tuple element out of range");
  }
  const Sign parity = tuple_parity(tuple);
  if (parity == Sign::Zero) return Sign::Zero;
  return parity * at_mask(mask_of(tuple));
}

std::vector<Sign> Chirotope::signs() const {
  std::vector<Sign> out;
  for (std::uint32_t mask : subsets_lex(m_, r_)) out.push_back(at_mask(mask));
  return out;
}

std::string Chirotope::str() const {
  std::string out;
  for (Sign s : signs()) out += to_char(s);
  return out;
}

Chirotope Chirotope::negated() const {
  Chirotope out = *this;
  for (auto& v : out.by_mask_) v = static_cast<std::int8_t>(-v);
  return out;
}

Chirotope Chirotope::transformed(const SignedPermutation& g) const {
  if (g.size() != m_) throw dimension_error("chirotope transformed by a permutation of wrong size");
  Chirotope out(m_, r_);
  std::vector<int> image(static_cast<std::size_t>(r_));
  for (std::uint32_t mask : subsets_lex(m_, r_)) {
    const auto tuple = elements_of(mask);
    Sign value = at_mask(mask);
    for (std::size_t k = 0; k < tuple.size(); ++k) {
      image[k] = g.image(tuple[k]);
      if (g.reorients(tuple[k])) value = -value;
    }
    out.by_mask_[mask_of(image)] = static_cast<std::int8_t>(tuple_parity(image) * value);
  }
  return out;
}

Chirotope chirotope_from_vectors(const VectorConfiguration& config) {
  const int r = config.rank;
  const int m = static_cast<int>(config.vectors.size());
  if (r < 1) throw dimension_error("vector configuration rank must be positive");
  if (m < r) throw rank_deficient_error("fewer vectors than the rank");
  for (const auto& v : config.vectors) {
    if (static_cast<int>(v.size()) != r) throw dimension_error("configuration vector has wrong dimension");
    if (std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; })) {
      throw std::invalid_argument("configuration contains a zero vector");
    }
  }
  std::vector<Sign> signs;
  bool any = false;
  for (std::uint32_t mask : subsets_lex(m, r)) {
    RationalMatrix rows;
    for (int e : elements_of(mask)) rows.push_back(config.vectors[static_cast<std::size_t>(e)]);
    const Sign s = sign_of(determinant(std::move(rows)));
    any = any || s != Sign::Zero;
    signs.push_back(s);
  }
  if (!any) throw rank_deficient_error("configuration spans less than the full rank");
  return Chirotope(m, r, signs);
}

ChirotopeCheck check_chirotope(const Chirotope& chi) {
  const int m = chi.ground_size();
  const int r = chi.rank();
  const auto tuples = subsets_lex(m, r);
  ChirotopeCheck result;
  if (std::all_of(tuples.begin(), tuples.end(), [&](std::uint32_t t) { return chi.at_mask(t) == Sign::Zero; })) {
    result.ok = false;
    result.reason = "identically zero";
    return result;
  }
  const auto tails = subsets_lex(m, r - 1);
  std::vector<int> x(static_cast<std::size_t>(r));
  std::vector<int> lhs(static_cast<std::size_t>(r));
  std::vector<int> rhs(static_cast<std::size_t>(r));
  for (int x1 = 0; x1 < m; ++x1) {
    for (std::uint32_t tail : tails) {
      if ((tail >> x1) & 1U) continue;
      x[0] = x1;
      const auto rest = elements_of(tail);
      std::copy(rest.begin(), rest.end(), x.begin() + 1);
      const Sign sx = chi(x);
      if (sx == Sign::Zero) continue;
      for (std::uint32_t ymask : tuples) {
        const Sign sy = chi.at_mask(ymask);
        if (sy == Sign::Zero) continue;
        const auto y = elements_of(ymask);
        const Sign target = sx * sy;
        bool found = false;
        for (std::size_t i = 0; i < y.size() && !found; ++i) {
          lhs = x;
          lhs[0] = y[i];
          rhs = y;
          rhs[i] = x1;
          found = chi(lhs) * chi(rhs) == target;
        }
        if (!found) {
          result.ok = false;
          result.x = x;
          result.y = y;
          result.reason = "exchange axiom violated";
          return result;
        }
      }
    }
  }
  return result;
}

std::vector<SignVector> cocircuits(const Chirotope& chi) {
  const int m = chi.ground_size();
  const int r = chi.rank();
  std::vector<SignVector> out;
  std::vector<int> tuple(static_cast<std::size_t>(r));
  for (std::uint32_t a : subsets_lex(m, r - 1)) {
    const auto base = elements_of(a);
    std::copy(base.begin(), base.end(), tuple.begin());
    std::uint32_t plus = 0;
    std::uint32_t minus = 0;
    for (int e = 0; e < m; ++e) {
      if ((a >> e) & 1U) continue;
      tuple.back() = e;
      const Sign s = chi(tuple);
      if (s == Sign::Plus) plus |= 1U << e;
      if (s == Sign::Minus) minus |= 1U << e;
    }
    if ((plus | minus) == 0) continue;
    out.push_back(SignVector::from_masks(m, plus, minus));
    out.push_back(SignVector::from_masks(m, minus, plus));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CovectorSet covectors(const Chirotope& chi) {
  const auto gens = cocircuits(chi);
  const int m = chi.ground_size();
  std::unordered_set<SignVector, SignVectorHash> seen;
  std::deque<SignVector> work;
  auto visit = [&](const SignVector& x) {
    if (seen.insert(x).second) work.push_back(x);
  };
  visit(SignVector(m));
  for (const auto& c : gens) visit(c);
  while (!work.empty()) {
    const SignVector x = work.front();
    work.pop_front();
    for (const auto& c : gens) {
      if ((c.support() & ~x.support()) != 0) visit(compose(x, c));
    }
  }
  return CovectorSet(m, std::vector<SignVector>(seen.begin(), seen.end()));
}

}  // namespace omkit
