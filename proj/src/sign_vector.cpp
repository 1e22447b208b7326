#include "omkit/sign_vector.hpp"

#include <algorithm>
#include <numeric>

#include "omkit/errors.hpp"

namespace omkit {

namespace {

void require_same_size(const SignVector& x, const SignVector& y, const char* op) {
  if (x.size() != y.size()) {
    throw dimension_error(std::string(op) + ": sign vectors of length " + std::to_string(x.size()) +
                          " and " + std::to_string(y.size()));
  }
}

}  // namespace

char to_char(Sign s) noexcept {
  switch (s) {
    case Sign::Plus:
      return '+';
    case Sign::Minus:
      return '-';
    default:
      return '0';
  }
}

Sign sign_from_char(char c) {
  switch (c) {
    case '+':
      return Sign::Plus;
    case '-':
      return Sign::Minus;
    case '0':
      return Sign::Zero;
    default:
      throw parse_error(std::string("invalid sign character '") + c + "'");
  }
}

SignVector::SignVector(int n) : n_(static_cast<std::uint8_t>(n)) {
  if (n < 1 || n > kMaxSize) {
    throw dimension_error("sign vector length must be in [1, 32], got " + std::to_string(n));
  }
}

SignVector SignVector::from_masks(int n, std::uint32_t plus, std::uint32_t minus) {
  SignVector v(n);
  if ((plus & minus) != 0 || ((plus | minus) & ~v.full_mask()) != 0) {
    throw std::invalid_argument("SignVector::from_masks: inconsistent masks");
  }
  v.plus_ = plus;
  v.minus_ = minus;
  return v;
}

SignVector SignVector::parse(std::string_view text) {
  SignVector v(static_cast<int>(text.size()));
  for (std::size_t i = 0; i < text.size(); ++i) {
    const Sign s = sign_from_char(text[i]);
    if (s == Sign::Plus) v.plus_ |= 1U << i;
    if (s == Sign::Minus) v.minus_ |= 1U << i;
  }
  return v;
}

SignVector SignVector::with(int i, Sign s) const {
  if (i < 0 || i >= n_) throw dimension_error("SignVector::with: index out of range");
  SignVector v = *this;
  const std::uint32_t bit = 1U << i;
  v.plus_ &= ~bit;
  v.minus_ &= ~bit;
  if (s == Sign::Plus) v.plus_ |= bit;
  if (s == Sign::Minus) v.minus_ |= bit;
  return v;
}

std::string SignVector::str() const {
  std::string out(n_, '0');
  for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = to_char((*this)[i]);
  return out;
}

std::uint64_t SignVector::order_key() const noexcept {
  std::uint64_t key = 0;
  for (int i = 0; i < n_; ++i) key = key * 4 + static_cast<std::uint64_t>(order_rank((*this)[i]));
  return key;
}

std::strong_ordering operator<=>(const SignVector& a, const SignVector& b) noexcept {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  const std::uint32_t diff = (a.plus_ ^ b.plus_) | (a.minus_ ^ b.minus_);
  if (diff == 0) return std::strong_ordering::equal;
  const int i = std::countr_zero(diff);
  return order_rank(a[i]) <=> order_rank(b[i]);
}

SignVector compose(const SignVector& x, const SignVector& y) {
  require_same_size(x, y, "compose");
  const std::uint32_t free = ~x.support();
  return SignVector::from_masks(x.size(), x.plus_mask() | (y.plus_mask() & free),
                                x.minus_mask() | (y.minus_mask() & free));
}

SignVector negate(const SignVector& x) {
  return SignVector::from_masks(x.size(), x.minus_mask(), x.plus_mask());
}

bool leq(const SignVector& x, const SignVector& y) {
  require_same_size(x, y, "leq");
  return (x.plus_mask() & ~y.plus_mask()) == 0 && (x.minus_mask() & ~y.minus_mask()) == 0;
}

bool less(const SignVector& x, const SignVector& y) { return leq(x, y) && x != y; }

std::uint32_t separation_mask(const SignVector& x, const SignVector& y) {
  require_same_size(x, y, "separation_mask");
  return (x.plus_mask() & y.minus_mask()) | (x.minus_mask() & y.plus_mask());
}

std::vector<SignVector> restriction(const SignVector& x, const SignVector& y) {
  require_same_size(x, y, "restriction");
  // Only entries with X_i = -Y_i != 0 may be zeroed; at least one must be.
  const std::uint32_t free = separation_mask(x, y);
  std::vector<SignVector> out;
  for (std::uint32_t sub = free; sub != 0; sub = (sub - 1) & free) {
    out.push_back(SignVector::from_masks(x.size(), x.plus_mask() & ~sub, x.minus_mask() & ~sub));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SignedPermutation::SignedPermutation(std::vector<int> image, std::uint32_t reorientation)
    : image_(std::move(image)), reorient_(reorientation) {
  const int n = size();
  if (n < 1 || n > SignVector::kMaxSize) throw dimension_error("signed permutation size out of range");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : image_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("signed permutation: relabeling is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  const std::uint32_t full = n == 32 ? ~0U : ((1U << n) - 1U);
  if ((reorient_ & ~full) != 0) throw std::invalid_argument("signed permutation: reorientation out of range");
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  return SignedPermutation(std::move(image), 0);
}

SignVector SignedPermutation::apply(const SignVector& x) const {
  if (x.size() != size()) throw dimension_error("signed permutation applied to vector of wrong length");
  std::uint32_t plus = 0;
  std::uint32_t minus = 0;
  const std::uint32_t p = x.plus_mask() ^ (reorient_ & x.support());
  const std::uint32_t m = x.minus_mask() ^ (reorient_ & x.support());
  for (int i = 0; i < size(); ++i) {
    const std::uint32_t bit = 1U << image_[static_cast<std::size_t>(i)];
    if ((p >> i) & 1U) plus |= bit;
    if ((m >> i) & 1U) minus |= bit;
  }
  return SignVector::from_masks(x.size(), plus, minus);
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(image_.size());
  std::uint32_t reorient = 0;
  for (int i = 0; i < size(); ++i) {
    const int j = image_[static_cast<std::size_t>(i)];
    inv[static_cast<std::size_t>(j)] = i;
    if (reorients(i)) reorient |= 1U << j;
  }
  return SignedPermutation(std::move(inv), reorient);
}

std::string SignedPermutation::str() const {
  std::string out = "perm=";
  for (int i = 0; i < size(); ++i) {
    if (i) out += ',';
    out += std::to_string(image_[static_cast<std::size_t>(i)] + 1);
  }
  out += " reorient=";
  bool any = false;
  for (int i = 0; i < size(); ++i) {
    if (!reorients(i)) continue;
    if (any) out += ',';
    out += std::to_string(i + 1);
    any = true;
  }
  if (!any) out += '-';
  return out;
}

SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h) {
  if (g.size() != h.size()) throw dimension_error("compose: signed permutations of different sizes");
  std::vector<int> image(static_cast<std::size_t>(g.size()));
  std::uint32_t reorient = 0;
  for (int i = 0; i < h.size(); ++i) {
    const int mid = h.image(i);
    image[static_cast<std::size_t>(i)] = g.image(mid);
    if (h.reorients(i) != g.reorients(mid)) reorient |= 1U << i;
  }
  return SignedPermutation(std::move(image), reorient);
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<SignedPermutation> out;
  do {
    for (std::uint32_t o = 0; o < (1U << n); ++o) out.emplace_back(perm, o);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace omkit
