#include "omkit/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>

#include "omkit/errors.hpp"
#include "omkit/parallel.hpp"

namespace omkit {

namespace {

constexpr int kCovectorElementsForArrangements = 7;

// ---- covector orbit scan -------------------------------------------------

struct OrbitBest {
  std::vector<std::uint32_t> keys;
  std::vector<int> perm;
  std::uint32_t reorient = 0;
};

class OrbitScan {
 public:
  OrbitScan(const CovectorSet& v, int fixed_element)
      : n_(v.ground_size()), fixed_(fixed_element), bitmap_(((std::size_t{1} << (2 * n_)) + 63) / 64, 0) {
    for (const auto& x : v.vectors()) {
      plus_.push_back(x.plus_mask());
      minus_.push_back(x.minus_mask());
    }
    symmetric_ = std::all_of(v.vectors().begin(), v.vectors().end(),
                             [&](const SignVector& x) { return v.contains(negate(x)); });
  }

  // Scans every reorientation for one relabeling, keeping the least image.
  void visit(const std::vector<int>& perm, OrbitBest& best) {
    std::uint32_t weight[8] = {};
    for (int i = 0; i < n_; ++i) weight[i] = 1U << (2 * (n_ - 1 - perm[static_cast<std::size_t>(i)]));
    std::uint32_t table[256];
    const std::uint32_t limit = 1U << n_;
    for (std::uint32_t b = 0; b < limit; ++b) {
      table[b] = b == 0 ? 0 : table[b & (b - 1)] + weight[std::countr_zero(b)];
    }
    // V = -V makes reorienting everything a no-op, so one element may stay fixed.
    const int pinned = symmetric_ ? (fixed_ >= 0 ? fixed_ : n_ - 1) : -1;
    for (std::uint32_t s = 0; s < limit; ++s) {
      if (pinned >= 0 && ((s >> pinned) & 1U)) continue;
      for (std::size_t k = 0; k < plus_.size(); ++k) {
        const std::uint32_t flip = s & (plus_[k] | minus_[k]);
        const std::uint32_t key = table[plus_[k] ^ flip] + 2 * table[minus_[k] ^ flip];
        bitmap_[key >> 6] |= std::uint64_t{1} << (key & 63);
      }
      if (best.keys.empty() || image_less(best.keys)) {
        best.keys = extract();
        best.perm = perm;
        best.reorient = s;
      }
      for (std::size_t k = 0; k < plus_.size(); ++k) {
        const std::uint32_t flip = s & (plus_[k] | minus_[k]);
        const std::uint32_t key = table[plus_[k] ^ flip] + 2 * table[minus_[k] ^ flip];
        bitmap_[key >> 6] &= ~(std::uint64_t{1} << (key & 63));
      }
    }
  }

 private:
  // Walks the set bits in increasing order against `best`.
  bool image_less(const std::vector<std::uint32_t>& best) const {
    std::size_t word = 0;
    std::uint64_t bits = bitmap_.empty() ? 0 : bitmap_[0];
    for (std::uint32_t b : best) {
      while (bits == 0) {
        if (++word == bitmap_.size()) return false;
        bits = bitmap_[word];
      }
      const auto key = static_cast<std::uint32_t>(word * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      if (key != b) return key < b;
      bits &= bits - 1;
    }
    return false;
  }

  std::vector<std::uint32_t> extract() const {
    std::vector<std::uint32_t> out;
    out.reserve(plus_.size());
    for (std::size_t w = 0; w < bitmap_.size(); ++w) {
      for (std::uint64_t bits = bitmap_[w]; bits != 0; bits &= bits - 1) {
        out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      }
    }
    return out;
  }

  int n_;
  int fixed_;
  bool symmetric_ = false;
  std::vector<std::uint32_t> plus_;
  std::vector<std::uint32_t> minus_;
  std::vector<std::uint64_t> bitmap_;
};

bool keys_less(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SignVector decode(int n, std::uint32_t key) {
  std::uint32_t plus = 0;
  std::uint32_t minus = 0;
  for (int pos = n - 1; pos >= 0; --pos, key >>= 2) {
    if ((key & 3U) == 1U) plus |= 1U << pos;
    if ((key & 3U) == 2U) minus |= 1U << pos;
  }
  return SignVector::from_masks(n, plus, minus);
}

// Element `fixed` (if any) is sent to position n-1; the remaining elements
// range over all assignments of the remaining positions. Work is split by the
// position of the first free element and merged in that order.
CanonicalForm scan_orbit(const CovectorSet& v, int fixed) {
  const int n = v.ground_size();
  if (n > kMaxCanonicalElements) {
    throw resource_error("exhaustive canonical form is limited to " + std::to_string(kMaxCanonicalElements) +
                         " elements, got " + std::to_string(n));
  }
  std::vector<int> free_elements;
  for (int e = 0; e < n; ++e) {
    if (e != fixed) free_elements.push_back(e);
  }
  const int free_positions = static_cast<int>(free_elements.size());

  std::vector<OrbitBest> results(static_cast<std::size_t>(std::max(free_positions, 1)));
  parallel_for(results.size(), [&](std::size_t chunk) {
    OrbitScan scan(v, fixed);
    std::vector<int> perm(static_cast<std::size_t>(n), 0);
    if (fixed >= 0) perm[static_cast<std::size_t>(fixed)] = n - 1;
    if (free_positions == 0) {
      scan.visit(perm, results[chunk]);
      return;
    }
    // Positions for free elements 1.. in lexicographic order; element 0 of
    // the free list takes position `chunk`.
    std::vector<int> rest;
    for (int p = 0; p < free_positions; ++p) {
      if (p != static_cast<int>(chunk)) rest.push_back(p);
    }
    perm[static_cast<std::size_t>(free_elements[0])] = static_cast<int>(chunk);
    do {
      for (std::size_t k = 0; k < rest.size(); ++k) perm[static_cast<std::size_t>(free_elements[k + 1])] = rest[k];
      scan.visit(perm, results[chunk]);
    } while (std::next_permutation(rest.begin(), rest.end()));
  });

  const OrbitBest* best = &results.front();
  for (const auto& r : results) {
    if (keys_less(r.keys, best->keys)) best = &r;
  }
  CanonicalForm form;
  form.ground_size = n;
  form.marked = fixed >= 0 ? n - 1 : -1;
  for (std::uint32_t k : best->keys) form.vectors.push_back(decode(n, k));
  form.certificate = SignedPermutation(best->perm, best->reorient);
  return form;
}

// ---- chirotope branch and bound ------------------------------------------

class ChirotopeCanon {
 public:
  ChirotopeCanon(const Chirotope& chi, int marked)
      : chi_(chi), m_(chi.ground_size()), r_(chi.rank()), marked_(marked) {
    const auto& table = chi.mask_values();
    values_ = table.data();
    blocks_.resize(static_cast<std::size_t>(m_));
    for (std::uint32_t mask = 0; mask < (1U << m_); ++mask) {
      if (std::popcount(mask) == r_) blocks_[static_cast<std::size_t>(31 - std::countl_zero(mask))].push_back(mask);
    }
    for (const auto& b : blocks_) {
      offsets_.push_back(total_);
      total_ += b.size();
    }
    current_.assign(total_, 0);
    sigma_.assign(static_cast<std::size_t>(m_), -1);
    sign_.assign(static_cast<std::size_t>(m_), 1);
  }

  ChirotopeForm run() {
    for (int eps : {1, -1}) {
      eps_ = eps;
      dfs(0, 0, false);
    }
    ChirotopeForm form;
    form.ground_size = m_;
    form.rank = r_;
    form.marked = marked_ >= 0 ? m_ - 1 : -1;
    for (std::int8_t v : best_) form.values += to_char(static_cast<Sign>(v));
    form.certificate = best_certificate_;
    form.negated = best_negated_;
    return form;
  }

 private:
  static int rank_of(std::int8_t v) { return v == 0 ? 0 : (v > 0 ? 1 : 2); }

  // Value of a position tuple under the current assignment, before the sign
  // of the element at the highest position is applied.
  std::int8_t base_value(std::uint32_t positions) const {
    int elems[8];
    int k = 0;
    std::uint32_t emask = 0;
    int sign = eps_;
    for (std::uint32_t t = positions; t != 0; t &= t - 1) {
      const int p = std::countr_zero(t);
      const int e = sigma_[static_cast<std::size_t>(p)];
      elems[k++] = e;
      emask |= 1U << e;
      if ((t & (t - 1)) != 0) sign *= sign_[static_cast<std::size_t>(e)];
    }
    const int v = values_[emask];
    if (v == 0) return 0;
    int inversions = 0;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) inversions += elems[i] > elems[j];
    }
    return static_cast<std::int8_t>((inversions % 2 == 0 ? 1 : -1) * sign * v);
  }

  void dfs(int p, std::uint32_t used, bool less) {
    if (p == m_) {
      if (!have_best_ || less) {
        have_best_ = true;
        best_ = current_;
        std::vector<int> image(static_cast<std::size_t>(m_));
        std::uint32_t reorient = 0;
        for (int q = 0; q < m_; ++q) {
          const int e = sigma_[static_cast<std::size_t>(q)];
          image[static_cast<std::size_t>(e)] = q;
          if (sign_[static_cast<std::size_t>(e)] < 0) reorient |= 1U << e;
        }
        best_certificate_ = SignedPermutation(std::move(image), reorient);
        best_negated_ = eps_ < 0;
      }
      return;
    }
    const auto& block = blocks_[static_cast<std::size_t>(p)];
    const std::size_t offset = offsets_[static_cast<std::size_t>(p)];
    for (int e = 0; e < m_; ++e) {
      if ((used >> e) & 1U) continue;
      const bool last = p == m_ - 1;
      if (marked_ >= 0 && (e == marked_) != last) continue;
      sigma_[static_cast<std::size_t>(p)] = e;

      std::int8_t first_nonzero = 0;
      for (std::size_t k = 0; k < block.size(); ++k) {
        current_[offset + k] = base_value(block[k]);
        if (first_nonzero == 0) first_nonzero = current_[offset + k];
      }
      // A nonzero block fixes the sign of e; an empty or all-zero block leaves
      // it to later blocks, so both choices are explored.
      int options[2] = {1, -1};
      int count = 2;
      if (first_nonzero != 0) {
        options[0] = first_nonzero > 0 ? 1 : -1;
        count = 1;
      }
      auto flip_block = [&] {
        for (std::size_t k = 0; k < block.size(); ++k) current_[offset + k] = static_cast<std::int8_t>(-current_[offset + k]);
      };
      for (int o = 0; o < count; ++o) {
        const int s = options[o];
        sign_[static_cast<std::size_t>(e)] = s;
        if (s < 0) flip_block();
        bool branch_less = less;
        bool pruned = false;
        if (have_best_ && !less) {
          for (std::size_t k = 0; k < block.size(); ++k) {
            const int a = rank_of(current_[offset + k]);
            const int b = rank_of(best_[offset + k]);
            if (a != b) {
              pruned = a > b;
              branch_less = a < b;
              break;
            }
          }
        }
        if (!pruned) dfs(p + 1, used | (1U << e), branch_less);
        if (s < 0) flip_block();
      }
      sign_[static_cast<std::size_t>(e)] = 1;
    }
  }

  const Chirotope& chi_;
  int m_;
  int r_;
  int marked_;
  const std::int8_t* values_ = nullptr;
  std::vector<std::vector<std::uint32_t>> blocks_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
  std::vector<std::int8_t> current_;
  std::vector<int> sigma_;
  std::vector<int> sign_;
  int eps_ = 1;
  bool have_best_ = false;
  std::vector<std::int8_t> best_;
  SignedPermutation best_certificate_;
  bool best_negated_ = false;
};

// ---- fingerprints --------------------------------------------------------

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string dimension_word(int k) {
  switch (k) {
    case 0:
      return "point";
    case 1:
      return "edge";
    default:
      return std::to_string(k) + "-dimensional face";
  }
}

// The first difference between two fingerprints, or empty.
std::string fingerprint_difference(const Fingerprint& a, const Fingerprint& b) {
  if (a.dimension != b.dimension) return "ambient dimensions differ";
  if (a.rank != b.rank) return "ranks differ";
  for (std::size_t k = 0; k < a.faces_by_dimension.size(); ++k) {
    if (a.faces_by_dimension[k] != b.faces_by_dimension[k]) {
      return static_cast<int>(k) == a.dimension ? "chamber count differs" : dimension_word(static_cast<int>(k)) + " count differs";
    }
  }
  for (std::size_t k = 0; k < a.bounded_by_dimension.size(); ++k) {
    if (a.bounded_by_dimension[k] != b.bounded_by_dimension[k]) {
      return static_cast<int>(k) == a.dimension ? "bounded chamber count differs"
                                                : "bounded " + dimension_word(static_cast<int>(k)) + " count differs";
    }
  }
  if (a.chambers != b.chambers) {
    std::map<ChamberShape, std::pair<int, int>> counts;
    for (const auto& c : a.chambers) ++counts[c].first;
    for (const auto& c : b.chambers) ++counts[c].second;
    // Prefer a shape that occurs on one side only, bounded shapes first.
    const ChamberShape* pick = nullptr;
    for (bool bounded : {true, false}) {
      for (const auto& [shape, n] : counts) {
        if (shape.bounded == bounded && (n.first == 0 || n.second == 0)) {
          pick = &shape;
          break;
        }
      }
      if (pick) break;
    }
    if (!pick) {
      for (const auto& [shape, n] : counts) {
        if (n.first != n.second) {
          pick = &shape;
          break;
        }
      }
    }
    return (pick->bounded ? "bounded " : "unbounded ") + shape_name(*pick, a.dimension) + " count differs";
  }
  if (a.incidence != b.incidence) return "hyperplane incidence profiles differ";
  return {};
}

Equivalence compare_affine_cones(const RationalArrangement& a, const RationalArrangement& b) {
  const int n = a.size() + 1;
  if (n <= kCovectorElementsForArrangements) {
    const AffineOrientedMatroid ca(covectors(cone_chirotope(a)), n - 1);
    const AffineOrientedMatroid cb(covectors(cone_chirotope(b)), n - 1);
    if (canonicalize_affine(ca) == canonicalize_affine(cb)) return {true, "canonical forms agree"};
    return {false, "canonical forms differ"};
  }
  if (canonicalize_chirotope(cone_chirotope(a), n - 1) == canonicalize_chirotope(cone_chirotope(b), n - 1)) {
    return {true, "canonical chirotopes agree"};
  }
  return {false, "canonical chirotopes differ"};
}

Equivalence compare_central(const RationalArrangement& a, const RationalArrangement& b,
                            const std::vector<GeometricFace>& fa, const std::vector<GeometricFace>& fb) {
  const int n = a.size();
  if (n <= kCovectorElementsForArrangements) {
    const CovectorSet va(n, face_covectors(fa));
    const CovectorSet vb(n, face_covectors(fb));
    if (canonicalize(va) == canonicalize(vb)) return {true, "canonical forms agree"};
    return {false, "canonical forms differ"};
  }
  const auto ka = canonicalize_chirotope(chirotope_from_vectors(normal_configuration(a)));
  const auto kb = canonicalize_chirotope(chirotope_from_vectors(normal_configuration(b)));
  if (ka == kb) return {true, "canonical chirotopes agree"};
  return {false, "canonical chirotopes differ"};
}

}  // namespace

std::string CanonicalForm::key() const {
  std::string out = "n=" + std::to_string(ground_size);
  if (marked >= 0) out += " g=" + std::to_string(marked + 1);
  out += ':';
  for (const auto& x : vectors) {
    out += ' ';
    out += x.str();
  }
  return out;
}

CanonicalForm canonicalize(const CovectorSet& v) { return scan_orbit(v, -1); }

CanonicalForm canonicalize_affine(const AffineOrientedMatroid& a) { return scan_orbit(a.om(), a.marked()); }

std::string ChirotopeForm::key() const {
  std::string out = "m=" + std::to_string(ground_size) + " r=" + std::to_string(rank);
  if (marked >= 0) out += " g=" + std::to_string(marked + 1);
  return out + ": " + values;
}

Chirotope ChirotopeForm::chirotope() const {
  std::vector<std::int8_t> table(std::size_t{1} << ground_size, 0);
  std::size_t k = 0;
  for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
    if (std::popcount(mask) == rank) table[mask] = static_cast<std::int8_t>(sign_from_char(values.at(k++)));
  }
  return Chirotope::from_mask_values(ground_size, rank, std::move(table));
}

ChirotopeForm canonicalize_chirotope(const Chirotope& chi, std::optional<int> marked) {
  if (chi.ground_size() > kMaxCanonicalElements + 4) {
    throw resource_error("chirotope canonical form is limited to 12 elements");
  }
  if (marked && (*marked < 0 || *marked >= chi.ground_size())) {
    throw invalid_marking_error("marked element " + std::to_string(*marked + 1) + " out of range");
  }
  return ChirotopeCanon(chi, marked.value_or(-1)).run();
}

int Fingerprint::rays() const {
  if (faces_by_dimension.size() < 2) return 0;
  return faces_by_dimension[1] - bounded_by_dimension[1];
}

int Fingerprint::bounded_chambers() const {
  return bounded_by_dimension.empty() ? 0 : bounded_by_dimension.back();
}

std::string Fingerprint::str() const {
  std::ostringstream out;
  out << "d=" << dimension << " rank=" << rank << " faces=" << join(faces_by_dimension)
      << " bounded=" << join(bounded_by_dimension) << " chambers=";
  for (std::size_t i = 0; i < chambers.size(); ++i) {
    const auto& c = chambers[i];
    out << (i ? ";" : "") << (c.bounded ? 'B' : 'U') << '[' << join(c.face_vector) << ']';
  }
  out << " incidence=";
  for (std::size_t i = 0; i < incidence.size(); ++i) out << (i ? ";" : "") << '[' << join(incidence[i]) << ']';
  return out.str();
}

std::vector<ChamberShape> chamber_shapes(const std::vector<GeometricFace>& faces, int dimension) {
  std::vector<ChamberShape> out;
  for (const auto& c : faces) {
    if (c.dimension != dimension) continue;
    ChamberShape shape;
    shape.bounded = c.bounded;
    shape.face_vector.assign(static_cast<std::size_t>(dimension), 0);
    for (const auto& f : faces) {
      if (f.dimension < dimension && leq(f.covector, c.covector)) ++shape.face_vector[static_cast<std::size_t>(f.dimension)];
    }
    shape.vertices = dimension > 0 ? shape.face_vector.front() : 0;
    shape.facets = dimension > 0 ? shape.face_vector.back() : 0;
    out.push_back(std::move(shape));
  }
  return out;
}

std::string shape_name(const ChamberShape& shape, int dimension) {
  if (dimension == 1) return shape.bounded ? "segment" : "half-line";
  if (dimension == 2) {
    if (!shape.bounded) return "region with " + std::to_string(shape.facets) + " edges";
    switch (shape.facets) {
      case 3:
        return "triangle";
      case 4:
        return "quadrilateral";
      case 5:
        return "pentagon";
      case 6:
        return "hexagon";
      default:
        return std::to_string(shape.facets) + "-gon";
    }
  }
  if (dimension == 3 && shape.bounded) {
    if (shape.facets == 4 && shape.vertices == 4) return "tetrahedron";
    if (shape.facets == 5 && shape.vertices == 5) return "square pyramid";
    if (shape.facets == 5 && shape.vertices == 6) return "triangular prism";
  }
  return (dimension == 3 ? "polyhedron" : "polytope") + std::string(" with ") + std::to_string(shape.facets) +
         " facets and " + std::to_string(shape.vertices) + " vertices";
}

Fingerprint fingerprint(const std::vector<GeometricFace>& faces, int dimension) {
  Fingerprint fp;
  fp.dimension = dimension;
  fp.rank = rank(face_covectors(faces));
  fp.faces_by_dimension.assign(static_cast<std::size_t>(dimension + 1), 0);
  fp.bounded_by_dimension.assign(static_cast<std::size_t>(dimension + 1), 0);
  for (const auto& f : faces) {
    ++fp.faces_by_dimension[static_cast<std::size_t>(f.dimension)];
    if (f.bounded) ++fp.bounded_by_dimension[static_cast<std::size_t>(f.dimension)];
  }
  fp.chambers = chamber_shapes(faces, dimension);
  std::sort(fp.chambers.begin(), fp.chambers.end());
  const int n = faces.empty() ? 0 : faces.front().covector.size();
  for (int i = 0; i < n; ++i) {
    std::vector<int> counts(static_cast<std::size_t>(dimension), 0);
    for (const auto& f : faces) {
      if (f.covector[i] == Sign::Zero && f.dimension < dimension) ++counts[static_cast<std::size_t>(f.dimension)];
    }
    fp.incidence.push_back(std::move(counts));
  }
  std::sort(fp.incidence.begin(), fp.incidence.end());
  return fp;
}

Equivalence are_equivalent(const RationalArrangement& a, const RationalArrangement& b, bool affine) {
  if (a.dimension() != b.dimension()) return {false, "ambient dimensions differ"};
  if (a.size() != b.size()) return {false, "hyperplane counts differ"};
  const auto fa = faces(a);
  const auto fb = faces(b);
  const std::string diff = fingerprint_difference(fingerprint(fa, a.dimension()), fingerprint(fb, b.dimension()));
  if (!diff.empty()) return {false, diff};
  if (!affine && a.is_central() && b.is_central()) return compare_central(a, b, fa, fb);
  return compare_affine_cones(a, b);
}

Equivalence are_equivalent(const CovectorSet& a, const CovectorSet& b) {
  if (a.ground_size() != b.ground_size()) return {false, "ground set sizes differ"};
  if (a.size() != b.size()) return {false, "covector counts differ"};
  if (rank(a) != rank(b)) return {false, "ranks differ"};
  if (canonicalize(a) == canonicalize(b)) return {true, "canonical forms agree"};
  return {false, "canonical forms differ"};
}

Equivalence are_equivalent(const AffineOrientedMatroid& a, const AffineOrientedMatroid& b) {
  if (a.om().ground_size() != b.om().ground_size()) return {false, "ground set sizes differ"};
  if (affine_faces(a).size() != affine_faces(b).size()) return {false, "affine face counts differ"};
  if (canonicalize_affine(a) == canonicalize_affine(b)) return {true, "canonical forms agree"};
  return {false, "canonical forms differ"};
}

}  // namespace omkit
