// AVX2 kernels: 256 positions per step. Partial trailing blocks fall back to
// the 64-bit word kernels.

#include <immintrin.h>

#include <bit>

#include "psg/kernels.hpp"

namespace psg::kernels::avx2 {
namespace {

constexpr std::size_t kBlock = 256;

// Four consecutive 64-bit words starting at bit `pos`. Reads words q..q+4.
inline __m256i load_block(const std::uint64_t* words, std::size_t pos) {
  const std::size_t q = pos >> 6;
  const int r = static_cast<int>(pos & 63);
  const __m256i lo =
      _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + q));
  const __m256i hi =
      _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + q + 1));
  // A shift count of 64 yields zero, so r == 0 needs no special case.
  return _mm256_or_si256(_mm256_srl_epi64(lo, _mm_cvtsi32_si128(r)),
                         _mm256_sll_epi64(hi, _mm_cvtsi32_si128(64 - r)));
}

inline __m256i diff_block(PlanesView x, std::size_t xp, PlanesView y,
                          std::size_t yp) {
  return _mm256_or_si256(
      _mm256_xor_si256(load_block(x.left, xp), load_block(y.left, yp)),
      _mm256_xor_si256(load_block(x.right, xp), load_block(y.right, yp)));
}

inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2,
                                       3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2,
                                       2, 3, 2, 3, 3, 4);
  const __m256i nibble = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, nibble);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), nibble);
  const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                                         _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

}  // namespace

std::size_t first_mismatch(PlanesView x, std::size_t xo, PlanesView y,
                           std::size_t yo, std::size_t len) {
  const std::size_t full = len - len % kBlock;
  for (std::size_t k = 0; k < full; k += kBlock) {
    const __m256i d = diff_block(x, xo + k, y, yo + k);
    if (_mm256_testz_si256(d, d)) continue;
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), d);
    for (std::size_t i = 0; i < 4; ++i) {
      if (lanes[i]) {
        return k + 64 * i + static_cast<std::size_t>(std::countr_zero(lanes[i]));
      }
    }
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
    const __m256i d = diff_block(x, xo + k, y, yo + k);
    if (_mm256_testz_si256(d, d)) continue;
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), d);
    for (std::size_t i = 4; i-- > 0;) {
      if (lanes[i]) {
        return k + 64 * i + 63 -
               static_cast<std::size_t>(std::countl_zero(lanes[i]));
      }
    }
  }
  return kNoMismatch;
}

LabelCounts histogram(PlanesView v, std::size_t off, std::size_t len) {
  const std::size_t full = len - len % kBlock;
  __m256i n_acc = _mm256_setzero_si256();
  __m256i l_acc = _mm256_setzero_si256();
  __m256i r_acc = _mm256_setzero_si256();
  for (std::size_t k = 0; k < full; k += kBlock) {
    const __m256i lw = load_block(v.left, off + k);
    const __m256i rw = load_block(v.right, off + k);
    n_acc = _mm256_add_epi64(n_acc, popcount_epi64(_mm256_and_si256(lw, rw)));
    l_acc = _mm256_add_epi64(l_acc, popcount_epi64(_mm256_andnot_si256(rw, lw)));
    r_acc = _mm256_add_epi64(r_acc, popcount_epi64(_mm256_andnot_si256(lw, rw)));
  }
  LabelCounts c = word::histogram(v, off + full, len - full);
  c.n += horizontal_sum(n_acc);
  c.l += horizontal_sum(l_acc);
  c.r += horizontal_sum(r_acc);
  c.p = len - c.n - c.l - c.r;
  return c;
}

}  // namespace psg::kernels::avx2
