#include "omkit/oriented_matroid.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "omkit/errors.hpp"

namespace omkit {

namespace {

std::uint64_t pack(const SignVector& x) {
  return (std::uint64_t{x.plus_mask()} << 32) | x.minus_mask();
}

class Membership {
 public:
  explicit Membership(const std::vector<SignVector>& vectors) {
    keys_.reserve(vectors.size() * 2);
    for (const auto& x : vectors) keys_.insert(pack(x));
  }
  bool operator()(const SignVector& x) const { return keys_.count(pack(x)) != 0; }
  bool masks(std::uint32_t plus, std::uint32_t minus) const {
    return keys_.count((std::uint64_t{plus} << 32) | minus) != 0;
  }

 private:
  std::unordered_set<std::uint64_t> keys_;
};

}  // namespace

CovectorSet::CovectorSet(int ground_size, std::vector<SignVector> vectors)
    : n_(ground_size), vectors_(std::move(vectors)) {
  if (n_ < 1 || n_ > SignVector::kMaxSize) {
    throw dimension_error("covector set ground size must be in [1, 32], got " + std::to_string(n_));
  }
  for (const auto& x : vectors_) {
    if (x.size() != n_) {
      throw dimension_error("covector " + x.str() + " has length " + std::to_string(x.size()) +
                            ", expected " + std::to_string(n_));
    }
  }
  std::sort(vectors_.begin(), vectors_.end());
  vectors_.erase(std::unique(vectors_.begin(), vectors_.end()), vectors_.end());
}

bool CovectorSet::contains(const SignVector& x) const {
  return std::binary_search(vectors_.begin(), vectors_.end(), x);
}

AxiomReport check_axioms(const CovectorSet& v) {
  AxiomReport report;
  const auto& vs = v.vectors();
  const Membership member(vs);
  const int n = v.ground_size();

  const SignVector zero(n);
  if (!member(zero)) report.sv0 = {false, {zero}};

  for (const auto& x : vs) {
    if (!member(negate(x))) {
      report.sv1 = {false, {x}};
      break;
    }
  }

  for (const auto& x : vs) {
    if (!report.sv2.pass) break;
    for (const auto& y : vs) {
      if (!member(compose(x, y))) {
        report.sv2 = {false, {x, y}};
        break;
      }
    }
  }

  for (const auto& x : vs) {
    if (!report.sv3.pass) break;
    const std::uint32_t xs = x.support();
    for (const auto& y : vs) {
      if ((y.support() & ~xs) != 0) continue;
      const std::uint32_t sep = separation_mask(x, y);
      if (sep == 0) continue;
      bool found = false;
      for (std::uint32_t sub = sep; sub != 0 && !found; sub = (sub - 1) & sep) {
        found = member.masks(x.plus_mask() & ~sub, x.minus_mask() & ~sub);
      }
      if (!found) {
        report.sv3 = {false, {x, y}};
        break;
      }
    }
  }
  return report;
}

std::vector<int> loops(const CovectorSet& v) {
  std::uint32_t seen = 0;
  for (const auto& x : v.vectors()) seen |= x.support();
  std::vector<int> out;
  for (int i = 0; i < v.ground_size(); ++i) {
    if (!((seen >> i) & 1U)) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<int, int>> parallel_pairs(const CovectorSet& v) {
  std::vector<std::pair<int, int>> out;
  const int n = v.ground_size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool same = true;
      bool opposite = true;
      for (const auto& x : v.vectors()) {
        if (x[i] != x[j]) same = false;
        if (x[i] != -x[j]) opposite = false;
        if (!same && !opposite) break;
      }
      if (same || opposite) out.emplace_back(i, j);
    }
  }
  return out;
}

int rank(std::span<const SignVector> vectors) {
  if (vectors.empty()) return 0;
  std::vector<SignVector> sorted(vectors.begin(), vectors.end());
  // Strictly smaller vectors have strictly smaller support.
  std::stable_sort(sorted.begin(), sorted.end(), [](const SignVector& a, const SignVector& b) {
    return std::popcount(a.support()) < std::popcount(b.support());
  });
  std::vector<int> height(sorted.size(), 0);
  int best = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (height[j] + 1 > height[i] && less(sorted[j], sorted[i])) height[i] = height[j] + 1;
    }
    best = std::max(best, height[i]);
  }
  return best;
}

AffineOrientedMatroid::AffineOrientedMatroid(CovectorSet om, int marked)
    : om_(std::move(om)), marked_(marked) {
  if (marked_ < 0 || marked_ >= om_.ground_size()) {
    throw invalid_marking_error("marked element " + std::to_string(marked_ + 1) + " out of range");
  }
  if (!check_axioms(om_).ok()) {
    throw std::invalid_argument("affine oriented matroid: covector set fails the axioms");
  }
  const auto l = loops(om_);
  if (std::find(l.begin(), l.end(), marked_) != l.end()) {
    throw invalid_marking_error("marked element " + std::to_string(marked_ + 1) + " is a loop");
  }
}

std::vector<SignVector> affine_faces(const AffineOrientedMatroid& a) {
  std::vector<SignVector> out;
  for (const auto& x : a.om().vectors()) {
    if (x[a.marked()] == Sign::Plus) out.push_back(x);
  }
  return out;
}

std::vector<int> FacePoset::maximal() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (upper_covers[i].empty()) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> FacePoset::minimal() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (lower_covers[i].empty()) out.push_back(static_cast<int>(i));
  }
  return out;
}

FacePoset face_poset(std::span<const SignVector> vectors) {
  FacePoset p;
  p.elements.assign(vectors.begin(), vectors.end());
  std::sort(p.elements.begin(), p.elements.end());
  p.elements.erase(std::unique(p.elements.begin(), p.elements.end()), p.elements.end());
  const std::size_t m = p.elements.size();
  p.lower_covers.assign(m, {});
  p.upper_covers.assign(m, {});

  for (std::size_t b = 0; b < m; ++b) {
    std::vector<std::size_t> below;
    for (std::size_t a = 0; a < m; ++a) {
      if (a != b && leq(p.elements[a], p.elements[b])) below.push_back(a);
    }
    for (std::size_t a : below) {
      const bool covered = std::none_of(below.begin(), below.end(), [&](std::size_t c) {
        return c != a && leq(p.elements[a], p.elements[c]);
      });
      if (covered) {
        p.covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
        p.lower_covers[b].push_back(static_cast<int>(a));
        p.upper_covers[a].push_back(static_cast<int>(b));
      }
    }
  }
  std::sort(p.covers.begin(), p.covers.end());
  return p;
}

}  // namespace omkit
