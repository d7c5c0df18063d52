// NEON kernels: 128 positions per step, word kernels for the remainder.

#include <arm_neon.h>

#include <bit>

#include "psg/kernels.hpp"

namespace psg::kernels::neon {
namespace {

constexpr std::size_t kBlock = 128;

// Two consecutive 64-bit words starting at bit `pos`. USHL by 64 yields zero.
inline uint64x2_t load_block(const std::uint64_t* words, std::size_t pos) {
  const std::size_t q = pos >> 6;
  const std::int64_t r = static_cast<std::int64_t>(pos & 63);
  const uint64x2_t lo = vld1q_u64(words + q);
  const uint64x2_t hi = vld1q_u64(words + q + 1);
  return vorrq_u64(vshlq_u64(lo, vdupq_n_s64(-r)),
                   vshlq_u64(hi, vdupq_n_s64(64 - r)));
}

inline uint64x2_t diff_block(PlanesView x, std::size_t xp, PlanesView y,
                             std::size_t yp) {
  return vorrq_u64(
      veorq_u64(load_block(x.left, xp), load_block(y.left, yp)),
      veorq_u64(load_block(x.right, xp), load_block(y.right, yp)));
}

inline std::size_t popcount128(uint64x2_t v) {
  return static_cast<std::size_t>(
      vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v))));
}

}  // namespace

std::size_t first_mismatch(PlanesView x, std::size_t xo, PlanesView y,
                           std::size_t yo, std::size_t len) {
  const std::size_t full = len - len % kBlock;
  for (std::size_t k = 0; k < full; k += kBlock) {
    const uint64x2_t d = diff_block(x, xo + k, y, yo + k);
    const std::uint64_t w0 = vgetq_lane_u64(d, 0);
    const std::uint64_t w1 = vgetq_lane_u64(d, 1);
    if (w0) return k + static_cast<std::size_t>(std::countr_zero(w0));
    if (w1) return k + 64 + static_cast<std::size_t>(std::countr_zero(w1));
  }
  const std::size_t t = word::first_mismatch(x, xo + full, y, yo + full,
                                             len - full);
  return t == kNoMismatch ? kNoMismatch : full + t;
}

std::size_t last_mismatch(PlanesView x, std::size_t xo, PlanesView y,
                          std::size_t yo, std::size_t len) {
  const std::size_t full = len - len % kBlock;
  const std::size_t t = word::last_mismatch(x, xo + full, y, yo + full,
                                            len - full);
  if (t != kNoMismatch) return full + t;
  for (std::size_t k = full; k > 0;) {
    k -= kBlock;
    const uint64x2_t d = diff_block(x, xo + k, y, yo + k);
    const std::uint64_t w0 = vgetq_lane_u64(d, 0);
    const std::uint64_t w1 = vgetq_lane_u64(d, 1);
    if (w1) return k + 127 - static_cast<std::size_t>(std::countl_zero(w1));
    if (w0) return k + 63 - static_cast<std::size_t>(std::countl_zero(w0));
  }
  return kNoMismatch;
}

LabelCounts histogram(PlanesView v, std::size_t off, std::size_t len) {
  const std::size_t full = len - len % kBlock;
  LabelCounts c = word::histogram(v, off + full, len - full);
  for (std::size_t k = 0; k < full; k += kBlock) {
    const uint64x2_t lw = load_block(v.left, off + k);
    const uint64x2_t rw = load_block(v.right, off + k);
    c.n += popcount128(vandq_u64(lw, rw));
    c.l += popcount128(vbicq_u64(lw, rw));
    c.r += popcount128(vbicq_u64(rw, lw));
  }
  c.p = len - c.n - c.l - c.r;
  return c;
}

}  // namespace psg::kernels::neon
