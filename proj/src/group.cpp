#include "wreath/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wreath/errors.hpp"

namespace wreath {

void GroupContext::check_order_limit(const Int& limit) const {
  if (order() > limit) {
    std::ostringstream os;
    os << "group order " << order() << " exceeds size limit " << limit;
    throw SizeLimitExceeded(os.str());
  }
}

ColoredPermutation::ColoredPermutation(GroupContext ctx, std::vector<std::uint32_t> images,
                                       std::vector<std::uint32_t> colors)
    : ctx_(ctx), images_(std::move(images)), colors_(std::move(colors)) {
  if (ctx_.m == 0) throw IndexOutOfRange("color modulus must be >= 1");
  if (images_.size() != ctx_.n || colors_.size() != ctx_.n)
    throw ContextMismatch("permutation size does not match context");
  std::vector<bool> seen(ctx_.n, false);
  for (std::uint32_t v : images_) {
    if (v < 1 || v > ctx_.n || seen[v - 1])
      throw Error("invalid permutation image sequence");
    seen[v - 1] = true;
  }
  for (std::uint32_t& c : colors_) c %= ctx_.m;
}

ColoredPermutation ColoredPermutation::identity(const GroupContext& ctx) {
  std::vector<std::uint32_t> img(ctx.n);
  std::iota(img.begin(), img.end(), 1);
  return ColoredPermutation(ctx, std::move(img), std::vector<std::uint32_t>(ctx.n, 0));
}

ColoredPermutation ColoredPermutation::generator_s(const GroupContext& ctx, unsigned i) {
  if (i < 1 || i + 1 > ctx.n) throw IndexOutOfRange("transposition index out of range");
  ColoredPermutation g = identity(ctx);
  std::swap(g.images_[i - 1], g.images_[i]);
  return g;
}

ColoredPermutation ColoredPermutation::generator_t(const GroupContext& ctx) {
  if (ctx.n < 1) throw IndexOutOfRange("generator t needs at least one strand");
  ColoredPermutation g = identity(ctx);
  g.colors_[0] = 1 % ctx.m;
  return g;
}

unsigned ColoredPermutation::image(unsigned i) const {
  if (i < 1 || i > ctx_.n) throw IndexOutOfRange("strand index out of range");
  return images_[i - 1];
}

unsigned ColoredPermutation::color(unsigned i) const {
  if (i < 1 || i > ctx_.n) throw IndexOutOfRange("strand index out of range");
  return colors_[i - 1];
}

bool ColoredPermutation::is_identity() const {
  for (std::uint32_t i = 0; i < ctx_.n; ++i)
    if (images_[i] != i + 1 || colors_[i] != 0) return false;
  return true;
}

ColoredPermutation multiply(const ColoredPermutation& g, const ColoredPermutation& h) {
  if (!(g.ctx_ == h.ctx_)) throw ContextMismatch("cannot multiply elements of different groups");
  const unsigned n = g.ctx_.n;
  const unsigned m = g.ctx_.m;
  // diag(g) P_g diag(h) P_h = diag(g.colors + h.colors o g^-1) P_{g o h}
  std::vector<std::uint32_t> ginv(n);
  for (unsigned i = 0; i < n; ++i) ginv[g.images_[i] - 1] = i;
  std::vector<std::uint32_t> img(n), col(n);
  for (unsigned i = 0; i < n; ++i) {
    img[i] = g.images_[h.images_[i] - 1];
    col[i] = (g.colors_[i] + h.colors_[ginv[i]]) % m;
  }
  return ColoredPermutation(g.ctx_, std::move(img), std::move(col));
}

ColoredPermutation ColoredPermutation::inverse() const {
  const unsigned n = ctx_.n;
  std::vector<std::uint32_t> img(n), col(n);
  for (unsigned i = 0; i < n; ++i) img[images_[i] - 1] = i + 1;
  for (unsigned i = 0; i < n; ++i)
    col[i] = (ctx_.m - colors_[images_[i] - 1]) % ctx_.m;
  return ColoredPermutation(ctx_, std::move(img), std::move(col));
}

ColoredPermutation ColoredPermutation::padded(const GroupContext& bigger) const {
  if (bigger.m != ctx_.m || bigger.n < ctx_.n)
    throw ContextMismatch("cannot pad element into the requested context");
  std::vector<std::uint32_t> img = images_, col = colors_;
  for (unsigned i = ctx_.n; i < bigger.n; ++i) {
    img.push_back(i + 1);
    col.push_back(0);
  }
  return ColoredPermutation(bigger, std::move(img), std::move(col));
}

bool operator<(const ColoredPermutation& a, const ColoredPermutation& b) {
  if (a.images_ != b.images_) return a.images_ < b.images_;
  return a.colors_ < b.colors_;
}

bool operator==(const ColoredPermutation& a, const ColoredPermutation& b) {
  return a.ctx_ == b.ctx_ && a.images_ == b.images_ && a.colors_ == b.colors_;
}

std::string ColoredPermutation::to_string() const {
  std::ostringstream os;
  os << "[";
  for (unsigned i = 0; i < ctx_.n; ++i) os << (i ? "," : "") << images_[i];
  os << "|";
  for (unsigned i = 0; i < ctx_.n; ++i) os << (i ? "," : "") << colors_[i];
  os << "]";
  return os.str();
}

ColoredPermutation jm_word(const GroupContext& ctx, unsigned i) {
  return jm_word_power(ctx, i, 1);
}

ColoredPermutation jm_word_power(const GroupContext& ctx, unsigned i, unsigned k) {
  if (i < 1 || i > ctx.n) throw IndexOutOfRange("Jucys-Murphy index out of range");
  ColoredPermutation g = ColoredPermutation::identity(ctx);
  std::vector<std::uint32_t> col(ctx.n, 0);
  col[i - 1] = k % ctx.m;
  return ColoredPermutation(ctx, g.images(), std::move(col));
}

std::vector<ColoredPermutation> enumerate_group(const GroupContext& ctx, const Int& limit) {
  ctx.check_order_limit(limit);
  std::vector<ColoredPermutation> out;
  std::vector<std::uint32_t> img(ctx.n);
  std::iota(img.begin(), img.end(), 1);
  do {
    std::vector<std::uint32_t> col(ctx.n, 0);
    while (true) {
      out.emplace_back(ctx, img, col);
      // lexicographic odometer, rightmost digit fastest
      unsigned i = ctx.n;
      while (i > 0 && col[i - 1] + 1 == ctx.m) col[--i] = 0;
      if (i == 0) break;
      ++col[i - 1];
    }
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace wreath
