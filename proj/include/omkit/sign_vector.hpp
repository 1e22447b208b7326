#pragma once

// Sign vectors over {+, 0, -}: order, negation, composition, restriction and
// the action of signed permutations (relabeling plus reorientation).
//
// Elements are indexed from 0 in the API. The textual form lists element 0
// first, e.g. "+-0".

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace omkit {

enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

constexpr Sign operator-(Sign s) noexcept { return static_cast<Sign>(-static_cast<int>(s)); }

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

/// Position of a sign in the frozen total order '0' < '+' < '-'.
constexpr int order_rank(Sign s) noexcept {
  return s == Sign::Zero ? 0 : (s == Sign::Plus ? 1 : 2);
}

char to_char(Sign s) noexcept;

/// Accepts '+', '-', '0'. Throws parse_error otherwise.
Sign sign_from_char(char c);

template <typename T>
constexpr Sign sign_of(const T& value) {
  return value > 0 ? Sign::Plus : (value < 0 ? Sign::Minus : Sign::Zero);
}

/// Fixed-length word over {+, 0, -}, packed as two bit masks.
class SignVector {
 public:
  static constexpr int kMaxSize = 32;

  SignVector() = default;

  /// The zero vector of length n, 1 <= n <= kMaxSize.
  explicit SignVector(int n);

  static SignVector from_masks(int n, std::uint32_t plus, std::uint32_t minus);
  static SignVector parse(std::string_view text);

  int size() const noexcept { return n_; }
  Sign operator[](int i) const noexcept {
    return (plus_ >> i) & 1U ? Sign::Plus : ((minus_ >> i) & 1U ? Sign::Minus : Sign::Zero);
  }
  SignVector with(int i, Sign s) const;

  std::uint32_t plus_mask() const noexcept { return plus_; }
  std::uint32_t minus_mask() const noexcept { return minus_; }
  std::uint32_t support() const noexcept { return plus_ | minus_; }
  std::uint32_t zero_mask() const noexcept { return full_mask() & ~support(); }
  std::uint32_t full_mask() const noexcept { return n_ == 32 ? ~0U : ((1U << n_) - 1U); }

  bool is_zero() const noexcept { return support() == 0; }
  int zero_count() const noexcept { return n_ - std::popcount(support()); }

  std::string str() const;

  /// Base-4 integer whose order agrees with the lexicographic order of str().
  std::uint64_t order_key() const noexcept;

  friend bool operator==(const SignVector&, const SignVector&) = default;

  /// Lexicographic, element 0 most significant, '0' < '+' < '-'.
  friend std::strong_ordering operator<=>(const SignVector& a, const SignVector& b) noexcept;

 private:
  std::uint8_t n_ = 0;
  std::uint32_t plus_ = 0;
  std::uint32_t minus_ = 0;
};

struct SignVectorHash {
  std::size_t operator()(const SignVector& v) const noexcept {
    std::uint64_t h = (std::uint64_t{v.plus_mask()} << 32) | v.minus_mask();
    h ^= std::uint64_t{static_cast<unsigned>(v.size())} << 58;
    h *= 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

/// (X o Y)_i = X_i if X_i != 0, else Y_i.
SignVector compose(const SignVector& x, const SignVector& y);
SignVector negate(const SignVector& x);
inline SignVector operator-(const SignVector& x) { return negate(x); }

/// X <= Y iff every nonzero entry of X agrees with Y.
bool leq(const SignVector& x, const SignVector& y);
/// X < Y: leq and X != Y.
bool less(const SignVector& x, const SignVector& y);

/// X_Y = { Z < X : X_i != -Y_i => Z_i = X_i }, sorted. Total on equal-length
/// pairs; the applicability guard of the covector axioms is not checked here.
std::vector<SignVector> restriction(const SignVector& x, const SignVector& y);

/// Indices where X and Y carry opposite nonzero signs.
std::uint32_t separation_mask(const SignVector& x, const SignVector& y);

/// Relabeling of the ground set together with a reorientation set. Acts by
/// apply(g, X)[image(i)] = -X_i if i is reoriented, else X_i.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  SignedPermutation(std::vector<int> image, std::uint32_t reorientation);

  static SignedPermutation identity(int n);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  int image(int i) const { return image_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& images() const noexcept { return image_; }
  std::uint32_t reorientation() const noexcept { return reorient_; }
  bool reorients(int i) const noexcept { return (reorient_ >> i) & 1U; }

  SignVector apply(const SignVector& x) const;
  SignedPermutation inverse() const;

  /// Text such as "perm=2,1,3 reorient=1" using 1-based labels.
  std::string str() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> image_;
  std::uint32_t reorient_ = 0;
};

/// (g o h)(X) = g(h(X)).
SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h);

/// All 2^n * n! signed permutations of {0..n-1}, in a fixed order.
std::vector<SignedPermutation> all_signed_permutations(int n);

}  // namespace omkit
