#include "omkit/arrangement.hpp"

#include <algorithm>
#include <stdexcept>

#include "omkit/errors.hpp"

namespace omkit {

namespace {

constexpr int kMaxFaceHyperplanes = 12;

bool proportional(const Hyperplane& a, const Hyperplane& b) {
  // Same point set iff (normal, offset) pairs are proportional.
  const std::size_t d = a.normal.size();
  std::size_t lead = 0;
  while (lead < d && a.normal[lead] == 0) ++lead;
  if (lead == d || b.normal[lead] == 0) return false;
  const Rational f = b.normal[lead] / a.normal[lead];
  for (std::size_t j = 0; j < d; ++j) {
    if (a.normal[j] * f != b.normal[j]) return false;
  }
  return a.offset * f == b.offset;
}

LinearConstraint sided(const Hyperplane& h, Sign s) {
  switch (s) {
    case Sign::Zero:
      return {h.normal, h.offset, Relation::Eq};
    case Sign::Plus:
      return {h.normal, h.offset, Relation::Gt};
    case Sign::Minus: {
      RationalVector neg(h.normal.size());
      for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -h.normal[j];
      return {std::move(neg), -h.offset, Relation::Gt};
    }
  }
  throw std::logic_error("bad sign");
}

std::vector<LinearConstraint> face_system(const RationalArrangement& a, const SignVector& sigma) {
  std::vector<LinearConstraint> sys;
  sys.reserve(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) sys.push_back(sided(a[i], sigma[i]));
  return sys;
}

void require_length(const RationalArrangement& a, const SignVector& sigma) {
  if (sigma.size() != a.size()) {
    throw dimension_error("sign vector " + sigma.str() + " has length " + std::to_string(sigma.size()) +
                          " for an arrangement of " + std::to_string(a.size()) + " hyperplanes");
  }
}

int zero_set_rank(const RationalArrangement& a, const SignVector& sigma) {
  RationalMatrix rows;
  for (int i = 0; i < a.size(); ++i) {
    if (sigma[i] == Sign::Zero) rows.push_back(a[i].normal);
  }
  return matrix_rank(std::move(rows));
}

// The closure's recession cone is {v : n_i.v = 0 (sigma_i = 0), sigma_i n_i.v >= 0}.
// It is nonzero iff some coordinate can be pushed to +1 or -1 inside it.
bool recession_cone_trivial(const RationalArrangement& a, const SignVector& sigma) {
  const int d = a.dimension();
  std::vector<LinearConstraint> base;
  for (int i = 0; i < a.size(); ++i) {
    const Hyperplane& h = a[i];
    if (sigma[i] == Sign::Zero) {
      base.push_back({h.normal, 0, Relation::Eq});
    } else {
      RationalVector c = h.normal;
      if (sigma[i] == Sign::Minus) {
        for (auto& q : c) q = -q;
      }
      base.push_back({std::move(c), 0, Relation::Ge});
    }
  }
  for (int j = 0; j < d; ++j) {
    for (int s : {1, -1}) {
      auto sys = base;
      RationalVector unit(static_cast<std::size_t>(d), Rational(0));
      unit[static_cast<std::size_t>(j)] = s;
      sys.push_back({std::move(unit), 1, Relation::Ge});
      if (is_feasible(d, sys)) return false;
    }
  }
  return true;
}

GeometricFace make_face(const RationalArrangement& a, SignVector sigma, RationalVector witness) {
  GeometricFace f;
  f.dimension = a.dimension() - zero_set_rank(a, sigma);
  f.bounded = recession_cone_trivial(a, sigma);
  f.covector = std::move(sigma);
  f.witness = std::move(witness);
  return f;
}

void check_witness(const RationalArrangement& a, const GeometricFace& f, const char* which) {
  if (f.covector.size() != a.size() || static_cast<int>(f.witness.size()) != a.dimension() ||
      a.covector_of(f.witness) != f.covector) {
    throw domain_error(std::string(which) + " is not a face of the arrangement");
  }
}

RationalVector cross(const RationalVector& u, const RationalVector& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

RationalVector minus(const RationalVector& u, const RationalVector& v) {
  RationalVector out(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) out[j] = u[j] - v[j];
  return out;
}

// Divide out the gcd when all coefficients are integers.
Hyperplane primitive(RationalVector n, Rational b) {
  mpz_class g = 0;
  for (const auto& q : n) {
    if (q.get_den() != 1) return {std::move(n), std::move(b)};
    g = gcd(g, q.get_num());
  }
  if (b.get_den() != 1) return {std::move(n), std::move(b)};
  g = gcd(g, b.get_num());
  if (g > 1) {
    for (auto& q : n) q /= g;
    b /= g;
  }
  return {std::move(n), std::move(b)};
}

Hyperplane line_through(const RationalVector& p, const RationalVector& q) {
  RationalVector n{q[1] - p[1], p[0] - q[0]};
  Rational b = dot(n, p);
  return primitive(std::move(n), std::move(b));
}

Hyperplane plane_through(const RationalVector& p, const RationalVector& q, const RationalVector& r) {
  RationalVector n = cross(minus(q, p), minus(r, p));
  Rational b = dot(n, p);
  return primitive(std::move(n), std::move(b));
}

// Unique common point of d hyperplanes in d-space; throws if not unique.
RationalVector meet(const std::vector<Hyperplane>& hs) {
  const std::size_t d = hs.size();
  std::vector<LinearConstraint> sys;
  RationalMatrix rows;
  for (const auto& h : hs) {
    sys.push_back({h.normal, h.offset, Relation::Eq});
    rows.push_back(h.normal);
  }
  if (matrix_rank(rows) != static_cast<int>(d)) throw std::logic_error("hyperplanes do not meet in a point");
  auto x = find_feasible_point(static_cast<int>(d), sys);
  if (!x) throw std::logic_error("hyperplanes do not meet");
  return *x;
}

}  // namespace

RationalArrangement::RationalArrangement(int dimension, std::vector<Hyperplane> hyperplanes)
    : d_(dimension), planes_(std::move(hyperplanes)) {
  if (d_ < 1 || d_ > kMaxDimension) {
    throw dimension_error("arrangement dimension must be in [1, 4], got " + std::to_string(d_));
  }
  if (planes_.empty()) throw std::invalid_argument("arrangement needs at least one hyperplane");
  if (planes_.size() > static_cast<std::size_t>(SignVector::kMaxSize)) {
    throw resource_error("arrangement has more than 32 hyperplanes");
  }
  for (std::size_t i = 0; i < planes_.size(); ++i) {
    const Hyperplane& h = planes_[i];
    if (static_cast<int>(h.normal.size()) != d_) {
      throw dimension_error("hyperplane " + std::to_string(i + 1) + " has " + std::to_string(h.normal.size()) +
                            " coefficients, expected " + std::to_string(d_));
    }
    if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& q) { return q == 0; })) {
      throw std::invalid_argument("hyperplane " + std::to_string(i + 1) + " has a zero normal");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (proportional(planes_[j], h)) {
        throw std::invalid_argument("hyperplanes " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                    " coincide");
      }
    }
  }
}

int RationalArrangement::rank() const {
  RationalMatrix rows;
  for (const auto& h : planes_) rows.push_back(h.normal);
  return matrix_rank(std::move(rows));
}

bool RationalArrangement::is_central() const {
  return sign_feasible(*this, SignVector(size()));
}

bool RationalArrangement::is_linear() const {
  return std::all_of(planes_.begin(), planes_.end(), [](const Hyperplane& h) { return h.offset == 0; });
}

SignVector RationalArrangement::covector_of(const RationalVector& point) const {
  if (static_cast<int>(point.size()) != d_) throw dimension_error("point has wrong dimension");
  SignVector x(size());
  for (int i = 0; i < size(); ++i) x = x.with(i, planes_[static_cast<std::size_t>(i)].side(point));
  return x;
}

bool sign_feasible(const RationalArrangement& a, const SignVector& sigma) {
  require_length(a, sigma);
  return is_feasible(a.dimension(), face_system(a, sigma));
}

GeometricFace face_of(const RationalArrangement& a, const SignVector& sigma) {
  require_length(a, sigma);
  auto w = find_feasible_point(a.dimension(), face_system(a, sigma));
  if (!w) throw domain_error(sigma.str() + " is not a face of the arrangement");
  return make_face(a, sigma, std::move(*w));
}

std::vector<GeometricFace> faces(const RationalArrangement& a) {
  const int n = a.size();
  if (n > kMaxFaceHyperplanes) {
    throw resource_error("face enumeration is limited to 12 hyperplanes, got " + std::to_string(n));
  }
  // Depth-first over sign prefixes; an infeasible prefix has no feasible
  // completion, so this visits exactly the feasible part of the 3^n sweep.
  std::vector<GeometricFace> out;
  std::vector<LinearConstraint> sys;
  std::vector<Sign> prefix;
  auto dfs = [&](auto&& self) -> void {
    const auto k = static_cast<int>(prefix.size());
    if (k == n) {
      SignVector sigma(n);
      for (int i = 0; i < n; ++i) sigma = sigma.with(i, prefix[static_cast<std::size_t>(i)]);
      auto w = find_feasible_point(a.dimension(), sys);
      out.push_back(make_face(a, std::move(sigma), std::move(*w)));
      return;
    }
    for (Sign s : {Sign::Zero, Sign::Plus, Sign::Minus}) {
      sys.push_back(sided(a[k], s));
      if (is_feasible(a.dimension(), sys)) {
        prefix.push_back(s);
        self(self);
        prefix.pop_back();
      }
      sys.pop_back();
    }
  };
  dfs(dfs);
  std::sort(out.begin(), out.end(), [](const GeometricFace& x, const GeometricFace& y) { return x.covector < y.covector; });
  return out;
}

std::vector<SignVector> face_covectors(const std::vector<GeometricFace>& fs) {
  std::vector<SignVector> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(f.covector);
  return out;
}

GeometricFace geometric_compose(const RationalArrangement& a, const GeometricFace& x, const GeometricFace& y) {
  check_witness(a, x, "X");
  check_witness(a, y, "Y");
  SignVector z(a.size());
  for (int i = 0; i < a.size(); ++i) {
    const Sign sp = a[i].side(x.witness);
    z = z.with(i, sp != Sign::Zero ? sp : a[i].side(y.witness));
  }
  return face_of(a, z);
}

std::vector<GeometricFace> geometric_restrict(const RationalArrangement& a, const GeometricFace& x,
                                              const GeometricFace& y) {
  check_witness(a, x, "X");
  check_witness(a, y, "Y");
  if (separation_mask(x.covector, y.covector) == 0) {
    throw domain_error("restriction needs X and Y separated by a hyperplane");
  }
  if ((y.covector.support() & ~x.covector.support()) != 0) {
    throw domain_error("restriction needs Y on every hyperplane containing X");
  }
  std::vector<GeometricFace> out;
  for (const auto& z : restriction(x.covector, y.covector)) {
    auto w = find_feasible_point(a.dimension(), face_system(a, z));
    if (w) out.push_back(make_face(a, z, std::move(*w)));
  }
  std::sort(out.begin(), out.end(), [](const GeometricFace& p, const GeometricFace& q) { return p.covector < q.covector; });
  return out;
}

RationalArrangement cone(const RationalArrangement& a) {
  const int d = a.dimension();
  if (d + 1 > RationalArrangement::kMaxDimension) {
    throw dimension_error("cone of a " + std::to_string(d) + "-dimensional arrangement exceeds dimension 4");
  }
  std::vector<Hyperplane> hs;
  for (const auto& h : a.hyperplanes()) {
    RationalVector n = h.normal;
    n.push_back(-h.offset);
    hs.push_back({std::move(n), 0});
  }
  RationalVector t(static_cast<std::size_t>(d + 1), Rational(0));
  t.back() = 1;
  hs.push_back({std::move(t), 0});
  return RationalArrangement(d + 1, std::move(hs));
}

RationalArrangement product_with_axis(const RationalArrangement& lines) {
  if (lines.dimension() != 2) throw dimension_error("product with an axis needs a line arrangement");
  std::vector<Hyperplane> hs;
  for (const auto& h : lines.hyperplanes()) hs.push_back({{h.normal[0], h.normal[1], 0}, h.offset});
  return RationalArrangement(3, std::move(hs));
}

RationalArrangement bisect(const RationalArrangement& a, std::optional<Hyperplane> plane) {
  if (a.dimension() != 3) throw dimension_error("bisect needs a 3-dimensional arrangement");
  auto hs = a.hyperplanes();
  hs.push_back(plane ? *plane : Hyperplane{{0, 0, 1}, 0});
  return RationalArrangement(3, std::move(hs));
}

RationalArrangement trivial_arrangement(int n, int d) {
  if (n < 1) throw std::invalid_argument("need at least one hyperplane");
  std::vector<Hyperplane> hs;
  for (int i = 0; i < n; ++i) {
    RationalVector normal(static_cast<std::size_t>(std::max(d, 0)), Rational(0));
    if (d >= 1) normal[0] = 1;
    hs.push_back({std::move(normal), i});
  }
  return RationalArrangement(d, std::move(hs));
}

RationalArrangement general_position(int n, int d) {
  if (n < 1) throw std::invalid_argument("need at least one hyperplane");
  std::vector<Hyperplane> hs;
  for (int i = 1; i <= n; ++i) {
    RationalVector normal;
    Rational power = 1;
    for (int j = 0; j < d; ++j) {
      normal.push_back(power);
      power *= i;
    }
    hs.push_back({std::move(normal), power});
  }
  return RationalArrangement(d, std::move(hs));
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

std::uint64_t max_chambers(int n, int d) {
  std::uint64_t sum = 0;
  for (int i = 0; i <= d; ++i) sum += binomial(n, i);
  return sum;
}

std::uint64_t max_vertices(int n, int d) { return binomial(n, d); }

namespace {

VectorConfiguration span_coordinates(const RationalMatrix& rows) {
  // Keep a set of columns on which the projection of the row space is
  // injective; every maximal minor then changes by one common factor.
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<std::size_t> keep;
  int current = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    RationalMatrix trial;
    for (const auto& r : rows) {
      RationalVector v;
      for (std::size_t k : keep) v.push_back(r[k]);
      v.push_back(r[c]);
      trial.push_back(std::move(v));
    }
    const int rk = matrix_rank(std::move(trial));
    if (rk > current) {
      keep.push_back(c);
      current = rk;
    }
  }
  VectorConfiguration config;
  config.rank = current;
  for (const auto& r : rows) {
    RationalVector v;
    for (std::size_t k : keep) v.push_back(r[k]);
    config.vectors.push_back(std::move(v));
  }
  return config;
}

}  // namespace

VectorConfiguration normal_configuration(const RationalArrangement& a) {
  if (!a.is_central()) throw domain_error("normal configuration needs a central arrangement");
  RationalMatrix rows;
  for (const auto& h : a.hyperplanes()) rows.push_back(h.normal);
  return span_coordinates(rows);
}

Chirotope cone_chirotope(const RationalArrangement& a) {
  RationalMatrix rows;
  for (const auto& h : a.hyperplanes()) {
    RationalVector v = h.normal;
    v.push_back(-h.offset);
    rows.push_back(std::move(v));
  }
  RationalVector t(static_cast<std::size_t>(a.dimension() + 1), Rational(0));
  t.back() = 1;
  rows.push_back(std::move(t));
  return chirotope_from_vectors(span_coordinates(rows));
}

PappusConstruction pappus() {
  const RationalVector a1{0, 0}, a2{2, 0}, a3{5, 0};
  const RationalVector b1{1, 4}, b2{4, 5}, b3{7, 6};
  std::vector<Hyperplane> hs{line_through(a1, a3), line_through(b1, b3),
                             line_through(a1, b2), line_through(a2, b1),
                             line_through(a1, b3), line_through(a3, b1),
                             line_through(a2, b3), line_through(a3, b2)};
  auto cut = [](const Hyperplane& g, const Hyperplane& h) { return meet({g, h}); };
  const RationalVector x = cut(hs[2], hs[3]);
  const RationalVector y = cut(hs[4], hs[5]);
  const RationalVector z = cut(hs[6], hs[7]);
  hs.push_back(line_through(x, y));
  const Hyperplane ninth = hs.back();

  const Rational det = determinant({{x[0], x[1], 1}, {y[0], y[1], 1}, {z[0], z[1], 1}});
  const bool on = ninth.side(x) == Sign::Zero && ninth.side(y) == Sign::Zero && ninth.side(z) == Sign::Zero;
  return {RationalArrangement(2, std::move(hs)), {x, y, z}, det, on};
}

GoodmanPollackConstruction goodman_pollack8() {
  const RationalVector o{0, 0, 0}, a{6, 0, 0}, b{0, 6, 0}, c{0, 0, 6};
  const RationalVector a1{2, 0, 0}, b1{0, 3, 0}, c1{0, 0, 4};
  const Hyperplane oab = plane_through(o, a, b);
  const Hyperplane oac = plane_through(o, a, c);
  const Hyperplane obc = plane_through(o, b, c);
  const Hyperplane abc = plane_through(a, b, c);
  const Hyperplane t1 = plane_through(a1, b1, c);   // A'B'C
  const Hyperplane t2 = plane_through(a, b1, c1);   // AB'C'
  const Hyperplane t3 = plane_through(a1, b, c1);   // A'BC'

  // P = BC ∩ B'C', Q = AC ∩ A'C', R = AB ∩ A'B'.
  const RationalVector p = meet({obc, abc, t2});
  const RationalVector q = meet({oac, abc, t3});
  const RationalVector r = meet({oab, abc, t1});
  const Hyperplane oqr = plane_through(o, q, r);

  const Rational det = determinant({minus(p, o), minus(q, o), minus(r, o)});
  return {RationalArrangement(3, {oab, oac, obc, abc, t1, t2, t3, oqr}), {o, p, q, r}, det};
}

}  // namespace omkit
