#include "support.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace omkit::testing {

namespace {

struct Poset {
  int size = 0;
  std::vector<std::vector<int>> up;
  std::vector<std::vector<int>> down;
};

Poset hasse(const std::vector<SignVector>& vs) {
  const int n = static_cast<int>(vs.size());
  std::vector<std::vector<char>> lt(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq(vs[i], vs[j])) lt[i][j] = 1;
  Poset p;
  p.size = n;
  p.up.resize(n);
  p.down.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!lt[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (lt[i][k] && lt[k][j]) cover = false;
      if (cover) {
        p.up[i].push_back(j);
        p.down[j].push_back(i);
      }
    }
  }
  return p;
}

using Colours = std::vector<int>;

// Refines both colourings jointly so that equal colours mean the same thing
// on either side. Returns false as soon as the colour histograms differ.
bool refine(const Poset& p, const Poset& q, Colours& cp, Colours& cq) {
  for (;;) {
    std::map<std::vector<int>, int> ids;
    auto signature = [](const Poset& g, const Colours& c, int v) {
      std::vector<int> up, down;
      for (int w : g.up[v]) up.push_back(c[w]);
      for (int w : g.down[v]) down.push_back(c[w]);
      std::sort(up.begin(), up.end());
      std::sort(down.begin(), down.end());
      std::vector<int> s{c[v], static_cast<int>(up.size())};
      s.insert(s.end(), up.begin(), up.end());
      s.push_back(-1);
      s.insert(s.end(), down.begin(), down.end());
      return s;
    };
    std::vector<std::vector<int>> sp(p.size), sq(q.size);
    for (int v = 0; v < p.size; ++v) ids.emplace(sp[v] = signature(p, cp, v), 0);
    for (int v = 0; v < q.size; ++v) ids.emplace(sq[v] = signature(q, cq, v), 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    Colours np(p.size), nq(q.size);
    for (int v = 0; v < p.size; ++v) np[v] = ids[sp[v]];
    for (int v = 0; v < q.size; ++v) nq[v] = ids[sq[v]];
    auto hp = np, hq = nq;
    std::sort(hp.begin(), hp.end());
    std::sort(hq.begin(), hq.end());
    if (hp != hq) return false;
    const auto classes = [](const Colours& c) {
      auto s = c;
      std::sort(s.begin(), s.end());
      return std::unique(s.begin(), s.end()) - s.begin();
    };
    const bool stable = classes(np) == classes(cp);
    cp = std::move(np);
    cq = std::move(nq);
    if (stable) return true;
  }
}

bool search(const Poset& p, const Poset& q, Colours cp, Colours cq) {
  if (!refine(p, q, cp, cq)) return false;
  // Pick the smallest non-singleton class.
  std::map<int, int> count;
  for (int c : cp) ++count[c];
  int best = -1;
  for (auto [c, k] : count)
    if (k > 1 && (best < 0 || k < count[best])) best = c;
  if (best < 0) {
    // Discrete: the colouring is a bijection; verify it preserves covers.
    std::vector<int> image(p.size);
    std::map<int, int> where;
    for (int v = 0; v < q.size; ++v) where[cq[v]] = v;
    for (int v = 0; v < p.size; ++v) image[v] = where[cp[v]];
    for (int v = 0; v < p.size; ++v) {
      std::vector<int> mapped;
      for (int w : p.up[v]) mapped.push_back(image[w]);
      auto target = q.up[image[v]];
      std::sort(mapped.begin(), mapped.end());
      std::sort(target.begin(), target.end());
      if (mapped != target) return false;
    }
    return true;
  }
  const int fresh = static_cast<int>(p.size + q.size) + 1;
  const int v = static_cast<int>(std::find(cp.begin(), cp.end(), best) - cp.begin());
  for (int w = 0; w < q.size; ++w) {
    if (cq[w] != best) continue;
    Colours np = cp, nq = cq;
    // Keep colours comparable after individualization.
    for (auto& c : np) c = c * 2;
    for (auto& c : nq) c = c * 2;
    np[v] = fresh * 2 + 1;
    nq[w] = fresh * 2 + 1;
    if (search(p, q, np, nq)) return true;
  }
  return false;
}

Colours heights(const Poset& p) {
  Colours h(p.size, -1);
  // Longest chain from a minimal element, by repeated relaxation.
  bool changed = true;
  for (int v = 0; v < p.size; ++v)
    if (p.down[v].empty()) h[v] = 0;
  while (changed) {
    changed = false;
    for (int v = 0; v < p.size; ++v)
      for (int w : p.down[v])
        if (h[w] >= 0 && h[w] + 1 > h[v]) {
          h[v] = h[w] + 1;
          changed = true;
        }
  }
  return h;
}

RationalVector solve_point(const RationalMatrix& rows, const RationalVector& rhs, int d) {
  // Gaussian elimination on the augmented system; returns empty if
  // inconsistent. Only called on square systems of full rank.
  RationalMatrix m = rows;
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(rhs[i]);
  int row = 0;
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = row; r < static_cast<int>(m.size()); ++r)
      if (m[r][col] != 0) piv = r;
    if (piv < 0) continue;
    std::swap(m[row], m[piv]);
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[row][col];
      for (int c = col; c <= d; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
  }
  RationalVector x(d);
  for (int r = 0; r < d; ++r) {
    int col = 0;
    while (m[r][col] == 0) ++col;
    x[col] = m[r][d] / m[r][col];
  }
  return x;
}

}  // namespace

bool posets_isomorphic(const std::vector<SignVector>& a, const std::vector<SignVector>& b) {
  if (a.size() != b.size()) return false;
  const Poset p = hasse(a);
  const Poset q = hasse(b);
  return search(p, q, heights(p), heights(q));
}

RationalArrangement transformed_copy(const RationalArrangement& a, std::mt19937& gen) {
  const int d = a.dimension();
  std::uniform_int_distribution<int> coef(-2, 2);
  RationalMatrix m;
  do {
    m.assign(d, RationalVector(d));
    for (auto& row : m)
      for (auto& x : row) x = coef(gen);
  } while (matrix_rank(m) < d);
  RationalVector t(d);
  for (auto& x : t) x = Rational(coef(gen), 1 + std::abs(coef(gen)));

  std::vector<Hyperplane> hs;
  std::bernoulli_distribution flip(0.5);
  for (const auto& h : a.hyperplanes()) {
    Hyperplane g;
    g.normal.assign(d, 0);
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i) g.normal[j] += m[i][j] * h.normal[i];
    g.offset = h.offset - dot(h.normal, t);
    if (flip(gen)) {
      for (auto& x : g.normal) x = -x;
      g.offset = -g.offset;
    }
    hs.push_back(std::move(g));
  }
  std::shuffle(hs.begin(), hs.end(), gen);
  return RationalArrangement(d, std::move(hs));
}

bool in_general_position(const RationalArrangement& a) {
  const int d = a.dimension();
  const int n = a.size();
  // Every d-subset: independent normals. Every (d+1)-subset: the point of
  // its first d members misses the last.
  std::vector<bool> mask(n, false);
  if (n < d) {
    RationalMatrix rows;
    for (const auto& h : a.hyperplanes()) rows.push_back(h.normal);
    return matrix_rank(rows) == n;
  }
  std::fill(mask.begin(), mask.begin() + d, true);
  do {
    RationalMatrix rows;
    RationalVector rhs;
    for (int i = 0; i < n; ++i)
      if (mask[i]) {
        rows.push_back(a[i].normal);
        rhs.push_back(a[i].offset);
      }
    if (matrix_rank(rows) < d) return false;
    const RationalVector x = solve_point(rows, rhs, d);
    for (int i = 0; i < n; ++i)
      if (!mask[i] && dot(a[i].normal, x) == a[i].offset) return false;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return true;
}

}  // namespace omkit::testing
