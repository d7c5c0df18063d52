#include <bit>

#include "psg/kernels.hpp"

namespace psg::kernels::word {
namespace {

inline std::uint64_t tail_mask(std::size_t bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

inline std::uint64_t diff_bits(PlanesView x, std::size_t xp, PlanesView y,
                               std::size_t yp) {
  return (load_bits(x.left, xp) ^ load_bits(y.left, yp)) |
         (load_bits(x.right, xp) ^ load_bits(y.right, yp));
}

}  // namespace

std::size_t first_mismatch(PlanesView x, std::size_t xo, PlanesView y,
                           std::size_t yo, std::size_t len) {
  for (std::size_t k = 0; k < len; k += 64) {
    std::uint64_t d = diff_bits(x, xo + k, y, yo + k) & tail_mask(len - k);
    if (d) return k + static_cast<std::size_t>(std::countr_zero(d));
  }
  return kNoMismatch;
}

std::size_t last_mismatch(PlanesView x, std::size_t xo, PlanesView y,
                          std::size_t yo, std::size_t len) {
  if (len == 0) return kNoMismatch;
  for (std::size_t k = (len - 1) & ~std::size_t{63};; k -= 64) {
    std::uint64_t d = diff_bits(x, xo + k, y, yo + k) & tail_mask(len - k);
    if (d) return k + 63 - static_cast<std::size_t>(std::countl_zero(d));
    if (k == 0) break;
  }
  return kNoMismatch;
}

LabelCounts histogram(PlanesView v, std::size_t off, std::size_t len) {
  LabelCounts c;
  for (std::size_t k = 0; k < len; k += 64) {
    const std::uint64_t mask = tail_mask(len - k);
    const std::uint64_t lw = load_bits(v.left, off + k) & mask;
    const std::uint64_t rw = load_bits(v.right, off + k) & mask;
    c.n += static_cast<std::size_t>(std::popcount(lw & rw));
    c.l += static_cast<std::size_t>(std::popcount(lw & ~rw));
    c.r += static_cast<std::size_t>(std::popcount(rw & ~lw));
  }
  c.p = len - c.n - c.l - c.r;
  return c;
}

}  // namespace psg::kernels::word
