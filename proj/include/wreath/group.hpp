#pragma once
// The wreath product G(m,1,n) = (Z/m)^n : S_n realised as monomial matrices:
// an element is a permutation together with a color in Z/m attached to each
// of the n strands (the diagonal part diag(z^c_1, .., z^c_n) times the
// 0/1 permutation matrix).

#include <cstdint>
#include <string>
#include <vector>

#include "wreath/rational.hpp"

namespace wreath {

inline constexpr long kDefaultSizeLimit = 10000;

struct GroupContext {
  unsigned m = 1;  // color modulus
  unsigned n = 0;  // number of strands
  Int order() const { return int_pow(Int(m), n) * factorial(n); }
  // SizeLimitExceeded if m^n * n! > limit.
  void check_order_limit(const Int& limit) const;
  friend bool operator==(const GroupContext&, const GroupContext&) = default;
};

class ColoredPermutation {
 public:
  // images are 1-based target positions (image[i-1] = pi(i)); colors mod m.
  ColoredPermutation(GroupContext ctx, std::vector<std::uint32_t> images,
                     std::vector<std::uint32_t> colors);

  static ColoredPermutation identity(const GroupContext& ctx);
  // s_i = transposition (i, i+1) with zero colors, 1 <= i <= n-1.
  static ColoredPermutation generator_s(const GroupContext& ctx, unsigned i);
  // t = identity permutation with color vector (1, 0, .., 0); needs n >= 1.
  static ColoredPermutation generator_t(const GroupContext& ctx);

  const GroupContext& ctx() const { return ctx_; }
  unsigned image(unsigned i) const;  // 1-based
  unsigned color(unsigned i) const;  // 1-based
  const std::vector<std::uint32_t>& images() const { return images_; }
  const std::vector<std::uint32_t>& colors() const { return colors_; }

  ColoredPermutation inverse() const;
  bool is_identity() const;
  // Same element viewed inside a wider context (extra strands fixed,
  // colorless).  ContextMismatch if the modulus differs or strands shrink.
  ColoredPermutation padded(const GroupContext& bigger) const;

  friend ColoredPermutation multiply(const ColoredPermutation& g, const ColoredPermutation& h);

  // Deterministic order: lexicographic on (images, colors).
  friend bool operator<(const ColoredPermutation& a, const ColoredPermutation& b);
  friend bool operator==(const ColoredPermutation& a, const ColoredPermutation& b);
  friend bool operator!=(const ColoredPermutation& a, const ColoredPermutation& b) {
    return !(a == b);
  }

  std::string to_string() const;

 private:
  GroupContext ctx_;
  std::vector<std::uint32_t> images_;
  std::vector<std::uint32_t> colors_;
};

// The Jucys-Murphy group element j_i = s_{i-1}..s_1 t s_1..s_{i-1}: the
// identity permutation with a single unit color on strand i.
ColoredPermutation jm_word(const GroupContext& ctx, unsigned i);
// j_i^k, directly: color k mod m on strand i.
ColoredPermutation jm_word_power(const GroupContext& ctx, unsigned i, unsigned k);

// All m^n * n! elements in lexicographic (images, colors) order.
std::vector<ColoredPermutation> enumerate_group(const GroupContext& ctx,
                                                const Int& limit = Int(kDefaultSizeLimit));

}  // namespace wreath
