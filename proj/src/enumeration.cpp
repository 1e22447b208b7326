#include "omkit/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "omkit/errors.hpp"
#include "omkit/isomorphism.hpp"
#include "omkit/oriented_matroid.hpp"
#include "omkit/parallel.hpp"

namespace omkit {

namespace {

constexpr int kMaxElements = 8;
constexpr int kMaxRank = 4;

// Sign of the permutation that sorts the tuple (rest sorted ascending, with
// `u` inserted at the front).
int front_parity(std::uint32_t rest, int u) {
  return std::popcount(rest & ((1U << u) - 1U)) % 2 == 0 ? 1 : -1;
}

// Value of the ordered tuple (u, v, X...) with X sorted, from a mask table.
int pair_front_value(const std::vector<std::int8_t>& table, std::uint32_t x, int u, int v) {
  if (u == v || ((x >> u) & 1U) || ((x >> v) & 1U)) return 0;
  const std::uint32_t mask = x | (1U << u) | (1U << v);
  const int value = table[mask];
  if (value == 0) return 0;
  // Move v to the front of (v, X), then u to the front of (u, v, X).
  const int pv = front_parity(x, v);
  const int pu = front_parity(x | (1U << v), u);
  return pv * pu * value;
}

struct Relation {
  // Three products chi(X,a,b)chi(X,c,d), -chi(X,a,c)chi(X,b,d), chi(X,a,d)chi(X,b,c).
  std::uint32_t x;
  std::array<int, 4> abcd;
};

class ExtensionSearch {
 public:
  explicit ExtensionSearch(const Chirotope& parent)
      : m_(parent.ground_size()), r_(parent.rank()), p_(parent.ground_size()) {
    if (m_ + 1 > Chirotope::kMaxGround) throw resource_error("extension exceeds the chirotope ground-set bound");
    table_.assign(std::size_t{1} << (m_ + 1), 0);
    const auto& old = parent.mask_values();
    std::copy(old.begin(), old.end(), table_.begin());
    build_variables();
    build_relations();
  }

  std::vector<Chirotope> run() {
    std::vector<Chirotope> out;
    if (!constants_ok_) return out;
    assign(0, out);
    return out;
  }

 private:
  void build_variables() {
    std::map<std::uint32_t, int> by_flat;
    std::vector<std::uint32_t> representative;
    for (std::uint32_t a : subsets_lex(m_, r_ - 1)) {
      std::uint32_t plus = 0;
      std::uint32_t minus = 0;
      for (int e = 0; e < m_; ++e) {
        if ((a >> e) & 1U) continue;
        // chi(e, A) from the sorted value, then (e, A) -> (A, e) takes r-1 transpositions.
        const int v = table_[a | (1U << e)] * front_parity(a, e);
        const int s = ((r_ - 1) % 2 == 0 ? 1 : -1) * v;
        if (s > 0) plus |= 1U << e;
        if (s < 0) minus |= 1U << e;
      }
      const std::uint32_t newmask = a | (1U << p_);
      if ((plus | minus) == 0) continue;  // dependent: the new value stays zero
      const std::uint32_t flat = ((1U << m_) - 1U) & ~(plus | minus);
      auto [it, inserted] = by_flat.try_emplace(flat, static_cast<int>(groups_.size()));
      if (inserted) {
        groups_.emplace_back();
        representative.push_back(plus);
      }
      const int h = it->second;
      int eps = 1;
      if (plus != representative[static_cast<std::size_t>(h)]) {
        if (minus != representative[static_cast<std::size_t>(h)]) {
          throw std::logic_error("parent is not a chirotope: cocircuits of one hyperplane disagree");
        }
        eps = -1;
      }
      groups_[static_cast<std::size_t>(h)].push_back({newmask, eps});
    }
  }

  int variable_of(std::uint32_t mask) const {
    if (!((mask >> p_) & 1U)) return -1;
    for (std::size_t h = 0; h < groups_.size(); ++h) {
      for (const auto& [m, eps] : groups_[h]) {
        if (m == mask) return static_cast<int>(h);
      }
    }
    return -1;
  }

  void build_relations() {
    triggered_.assign(groups_.size(), {});
    if (r_ < 2) return;
    const int n = m_ + 1;
    for (std::uint32_t x : subsets_lex(n, r_ - 2)) {
      std::vector<int> rest;
      for (int e = 0; e < n; ++e) {
        if (!((x >> e) & 1U)) rest.push_back(e);
      }
      const std::size_t k = rest.size();
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          for (std::size_t u = j + 1; u < k; ++u) {
            for (std::size_t w = u + 1; w < k; ++w) {
              Relation rel{x, {rest[i], rest[j], rest[u], rest[w]}};
              const std::uint32_t all = x | (1U << rel.abcd[0]) | (1U << rel.abcd[1]) | (1U << rel.abcd[2]) |
                                        (1U << rel.abcd[3]);
              if (!((all >> p_) & 1U)) continue;
              int trigger = -1;
              for (int s = 0; s < 4; ++s) {
                for (int t = s + 1; t < 4; ++t) {
                  const std::uint32_t mask = x | (1U << rel.abcd[s]) | (1U << rel.abcd[t]);
                  trigger = std::max(trigger, variable_of(mask));
                }
              }
              if (trigger < 0) {
                if (!relation_holds(rel)) constants_ok_ = false;
              } else {
                triggered_[static_cast<std::size_t>(trigger)].push_back(rel);
              }
            }
          }
        }
      }
    }
  }

  bool relation_holds(const Relation& rel) const {
    const auto [a, b, c, d] = rel.abcd;
    const int t1 = pair_front_value(table_, rel.x, a, b) * pair_front_value(table_, rel.x, c, d);
    const int t2 = -pair_front_value(table_, rel.x, a, c) * pair_front_value(table_, rel.x, b, d);
    const int t3 = pair_front_value(table_, rel.x, a, d) * pair_front_value(table_, rel.x, b, c);
    const bool pos = t1 > 0 || t2 > 0 || t3 > 0;
    const bool neg = t1 < 0 || t2 < 0 || t3 < 0;
    return pos == neg;  // both signs present, or all three zero
  }

  void assign(std::size_t h, std::vector<Chirotope>& out) {
    if (h == groups_.size()) {
      if (leaf_ok()) out.push_back(Chirotope::from_mask_values(m_ + 1, r_, table_));
      return;
    }
    for (int sigma : {0, 1, -1}) {
      for (const auto& [mask, eps] : groups_[h]) table_[mask] = static_cast<std::int8_t>(eps * sigma);
      bool ok = true;
      for (const auto& rel : triggered_[h]) {
        if (!relation_holds(rel)) {
          ok = false;
          break;
        }
      }
      if (ok) assign(h + 1, out);
    }
    for (const auto& [mask, eps] : groups_[h]) table_[mask] = 0;
  }

  bool leaf_ok() const {
    const std::uint32_t pbit = 1U << p_;
    // The new element must be neither a loop nor parallel to an old one.
    std::uint32_t seen_with_p = 0;
    for (std::uint32_t mask = pbit; mask < table_.size(); mask = (mask + 1) | pbit) {
      if (table_[mask] != 0) seen_with_p |= mask;
    }
    if (seen_with_p == 0) return false;
    if ((seen_with_p & ~pbit) != (1U << m_) - 1U) return false;
    return exchange_ok();
  }

  // Value of an ordered tuple given as an element list.
  int value(const int* t) const {
    std::uint32_t mask = 0;
    int inversions = 0;
    for (int i = 0; i < r_; ++i) {
      if ((mask >> t[i]) & 1U) return 0;
      mask |= 1U << t[i];
      for (int j = 0; j < i; ++j) inversions += t[j] > t[i];
    }
    const int v = table_[mask];
    return inversions % 2 == 0 ? v : -v;
  }

  // Exchange axiom for the pairs that involve the new element; pairs inside
  // the parent's ground set hold already.
  bool exchange_ok() const {
    const int n = m_ + 1;
    const auto tuples = subsets_lex(n, r_);
    int x[8];
    int lhs[8];
    int rhs[8];
    int y[8];
    for (std::uint32_t xmask : tuples) {
      if (table_[xmask] == 0) continue;
      for (std::uint32_t lead = xmask; lead != 0; lead &= lead - 1) {
        const int x1 = std::countr_zero(lead);
        int k = 0;
        x[k++] = x1;
        for (std::uint32_t t = xmask & ~(1U << x1); t != 0; t &= t - 1) x[k++] = std::countr_zero(t);
        const int sx = value(x);
        for (std::uint32_t ymask : tuples) {
          if (table_[ymask] == 0 || !(((xmask | ymask) >> p_) & 1U)) continue;
          int q = 0;
          for (std::uint32_t t = ymask; t != 0; t &= t - 1) y[q++] = std::countr_zero(t);
          const int target = sx * table_[ymask];
          bool found = false;
          for (int i = 0; i < r_ && !found; ++i) {
            std::copy(x, x + r_, lhs);
            lhs[0] = y[i];
            std::copy(y, y + r_, rhs);
            rhs[i] = x1;
            found = value(lhs) * value(rhs) == target;
          }
          if (!found) return false;
        }
      }
    }
    return true;
  }

  int m_;
  int r_;
  int p_;
  std::vector<std::int8_t> table_;
  std::vector<std::vector<std::pair<std::uint32_t, int>>> groups_;
  std::vector<std::vector<Relation>> triggered_;
  bool constants_ok_ = true;
};

void check_bounds(int m, int r) {
  if (m < 1 || r < 1) throw std::invalid_argument("element count and rank must be positive");
  if (m > kMaxElements || r > kMaxRank) {
    throw resource_error("enumeration is limited to 8 elements and rank 4, got m=" + std::to_string(m) +
                         " r=" + std::to_string(r));
  }
}

Chirotope boolean_chirotope(int r) {
  std::vector<std::int8_t> table(std::size_t{1} << r, 0);
  table.back() = 1;
  return Chirotope::from_mask_values(r, r, std::move(table));
}

// Classes on one more element, deduplicated by canonical key.
std::vector<OMClass> extend_level(const std::vector<OMClass>& level) {
  std::vector<std::map<std::string, Chirotope>> found(level.size());
  parallel_for(level.size(), [&](std::size_t i) {
    for (const auto& child : single_element_extensions(level[i].chirotope)) {
      const auto form = canonicalize_chirotope(child);
      auto key = form.key();
      if (!found[i].count(key)) found[i].emplace(std::move(key), form.chirotope());
    }
  });
  std::map<std::string, Chirotope> merged;
  for (auto& part : found) merged.merge(part);
  std::vector<OMClass> out;
  for (auto& [key, chi] : merged) out.push_back({std::move(chi), key});
  return out;
}

std::vector<OMClass> boolean_level(int r) {
  const auto form = canonicalize_chirotope(boolean_chirotope(r));
  return {{form.chirotope(), form.key()}};
}

std::vector<OMClass> levels_up_to(int m, int r) {
  if (m < r) return {};
  auto level = boolean_level(r);
  for (int size = r; size < m; ++size) level = extend_level(level);
  return level;
}

std::vector<AffineClass> mark_all(const std::vector<OMClass>& oms) {
  std::vector<std::map<std::string, Chirotope>> found(oms.size());
  parallel_for(oms.size(), [&](std::size_t i) {
    const Chirotope& chi = oms[i].chirotope;
    for (int g = 0; g < chi.ground_size(); ++g) {
      const auto form = canonicalize_chirotope(chi, g);
      auto key = form.key();
      if (!found[i].count(key)) found[i].emplace(std::move(key), form.chirotope());
    }
  });
  std::map<std::string, Chirotope> merged;
  for (auto& part : found) merged.merge(part);
  std::vector<AffineClass> out;
  for (auto& [key, chi] : merged) out.push_back({std::move(chi), key});
  return out;
}

}  // namespace

std::vector<Chirotope> single_element_extensions(const Chirotope& parent) {
  return ExtensionSearch(parent).run();
}

std::vector<OMClass> enumerate_oms(int m, int r) {
  check_bounds(m, r);
  return levels_up_to(m, r);
}

std::vector<AffineClass> enumerate_affine(int n, int r) {
  check_bounds(n + 1, r + 1);
  return mark_all(levels_up_to(n + 1, r + 1));
}

ClassCheck validate_class(const Chirotope& chi) {
  ClassCheck check;
  const CovectorSet v = covectors(chi);
  check.axioms = check_axioms(v).ok();
  check.loop_free = loops(v).empty();
  check.simple = parallel_pairs(v).empty();
  check.rank_ok = rank(v) == chi.rank();
  return check;
}

std::optional<std::uint64_t> table1_count(int n, int r) {
  static const std::map<std::pair<int, int>, std::uint64_t> table = [] {
    std::map<std::pair<int, int>, std::uint64_t> t;
    for (int n = 1; n <= 10; ++n) t[{n, 1}] = 1;
    const std::uint64_t rank2[] = {1, 3, 8, 46, 790, 37829, 4134939};
    for (int k = 0; k < 7; ++k) t[{k + 2, 2}] = rank2[k];
    const std::uint64_t rank3[] = {1, 5, 27, 1063, 1434219};
    for (int k = 0; k < 5; ++k) t[{k + 3, 3}] = rank3[k];
    const std::uint64_t totals[] = {1, 2, 5, 14, 74, 1854, 1472049};
    for (int k = 0; k < 7; ++k) t[{k + 1, 0}] = totals[k];
    return t;
  }();
  if (r >= 1 && r <= 3 && r > n) return 0;
  const auto it = table.find({n, r});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint64_t> Census::count(int n, int r) const {
  if (r < 1 || r > 3 || n < 1 || n > n_max) return std::nullopt;
  return counts[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)];
}

std::optional<std::uint64_t> Census::total(int n) const {
  std::uint64_t sum = 0;
  for (int r = 1; r <= 3; ++r) {
    const auto c = count(n, r);
    if (!c) return std::nullopt;
    sum += *c;
  }
  return sum;
}

std::vector<std::pair<int, int>> Census::mismatches() const {
  std::vector<std::pair<int, int>> out;
  for (int n = 1; n <= n_max; ++n) {
    for (int r = 1; r <= 3; ++r) {
      const auto got = count(n, r);
      const auto want = table1_count(n, r);
      if (got && want && *got != *want) out.emplace_back(n, r);
    }
    const auto got = total(n);
    const auto want = table1_count(n, 0);
    if (got && want && *got != *want) out.emplace_back(n, 0);
  }
  return out;
}

std::string Census::str() const {
  std::ostringstream out;
  auto cell = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string("?"); };
  out << "n:";
  for (int n = 1; n <= n_max; ++n) out << ' ' << n;
  out << '\n';
  for (int r = 1; r <= 3; ++r) {
    out << "r=" << r << ':';
    for (int n = 1; n <= n_max; ++n) {
      const auto c = count(n, r);
      out << ' ' << (c && *c == 0 && r > n ? std::string("-") : cell(c));
    }
    out << '\n';
  }
  out << "r<=3:";
  for (int n = 1; n <= n_max; ++n) out << ' ' << cell(total(n));
  out << '\n';
  const auto bad = mismatches();
  if (bad.empty()) {
    out << "census matches the reference counts\n";
  } else {
    for (const auto& [n, r] : bad) {
      const auto got = r == 0 ? total(n) : count(n, r);
      out << "mismatch at n=" << n << (r == 0 ? std::string(" totals") : " r=" + std::to_string(r)) << ": got "
          << cell(got) << ", expected " << cell(table1_count(n, r)) << '\n';
    }
  }
  return out.str();
}

Census census_table(int n_max) {
  if (n_max < 1) throw std::invalid_argument("census needs n >= 1");
  if (n_max > 7) throw resource_error("census is limited to n <= 7");
  Census census;
  census.n_max = n_max;
  census.counts.assign(4, std::vector<std::optional<std::uint64_t>>(static_cast<std::size_t>(n_max + 1)));
  for (int r = 1; r <= 3; ++r) {
    const int top = (n_max == 7 && r == 3) ? 6 : n_max;
    // One extension chain per rank serves every column.
    std::vector<OMClass> level = boolean_level(r + 1);
    for (int n = 1; n <= top; ++n) {
      auto& cell = census.counts[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)];
      if (r > n) {
        cell = 0;
        continue;
      }
      if (n > r) level = extend_level(level);
      cell = mark_all(level).size();
    }
  }
  return census;
}

}  // namespace omkit
