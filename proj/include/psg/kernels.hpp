#pragma once

// Data-parallel kernels over bit-packed outcome planes.
//
// An outcome sequence is stored as two bit planes: bit n of `left` is set iff
// Left moving first wins from heap n, bit n of `right` is set iff Right moving
// first wins. Every kernel has a bit-at-a-time scalar reference, a portable
// 64-bit word version, and AVX2 / NEON versions where the target allows; the
// active table is picked at runtime.
//
// Plane buffers must stay readable kPlanePadWords words past the last word that
// holds a live bit; the padded words must be zero.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "psg/outcome.hpp"

namespace psg::kernels {

inline constexpr std::size_t kPlanePadWords = 8;
inline constexpr std::size_t kNoMismatch = static_cast<std::size_t>(-1);

struct PlanesView {
  const std::uint64_t* left = nullptr;
  const std::uint64_t* right = nullptr;
  std::size_t size = 0;  // live bits
};

// Offset t of the first (last) position with label(x, xo + t) != label(y, yo + t)
// for t in [0, len), or kNoMismatch.
using MismatchFn = std::size_t (*)(PlanesView x, std::size_t xo, PlanesView y,
                                   std::size_t yo, std::size_t len);
// Label counts over [off, off + len).
using HistogramFn = LabelCounts (*)(PlanesView v, std::size_t off,
                                    std::size_t len);

enum class Isa : std::uint8_t { Scalar, Word, Avx2, Neon };

std::string_view to_string(Isa isa);
std::optional<Isa> isa_from_string(std::string_view name);

struct KernelTable {
  Isa isa;
  MismatchFn first_mismatch;
  MismatchFn last_mismatch;
  HistogramFn histogram;
};

/// Tables compiled in and supported by the running CPU, slowest first.
std::vector<Isa> available();

/// nullptr when `isa` is not compiled in or not supported by this CPU.
const KernelTable* table_for(Isa isa);

/// The table used by the engine. Defaults to the fastest available one; the
/// PSG_ISA environment variable (scalar|word|avx2|neon) overrides.
const KernelTable& active();

/// Overrides the active table. Returns false if `isa` is unavailable.
bool force(Isa isa);

inline std::size_t first_mismatch(PlanesView x, std::size_t xo, PlanesView y,
                                  std::size_t yo, std::size_t len) {
  return active().first_mismatch(x, xo, y, yo, len);
}
inline std::size_t last_mismatch(PlanesView x, std::size_t xo, PlanesView y,
                                 std::size_t yo, std::size_t len) {
  return active().last_mismatch(x, xo, y, yo, len);
}
inline LabelCounts histogram(PlanesView v, std::size_t off, std::size_t len) {
  return active().histogram(v, off, len);
}

namespace scalar {
std::size_t first_mismatch(PlanesView, std::size_t, PlanesView, std::size_t,
                           std::size_t);
std::size_t last_mismatch(PlanesView, std::size_t, PlanesView, std::size_t,
                          std::size_t);
LabelCounts histogram(PlanesView, std::size_t, std::size_t);
}  // namespace scalar

namespace word {
std::size_t first_mismatch(PlanesView, std::size_t, PlanesView, std::size_t,
                           std::size_t);
std::size_t last_mismatch(PlanesView, std::size_t, PlanesView, std::size_t,
                          std::size_t);
LabelCounts histogram(PlanesView, std::size_t, std::size_t);

// 64 bits starting at bit `pos`; reads one word past the containing word.
inline std::uint64_t load_bits(const std::uint64_t* words, std::size_t pos) {
  const std::size_t q = pos >> 6;
  const unsigned r = static_cast<unsigned>(pos & 63);
  if (r == 0) return words[q];
  return (words[q] >> r) | (words[q + 1] << (64 - r));
}
}  // namespace word

#if defined(PSG_ENABLE_AVX2)
namespace avx2 {
std::size_t first_mismatch(PlanesView, std::size_t, PlanesView, std::size_t,
                           std::size_t);
std::size_t last_mismatch(PlanesView, std::size_t, PlanesView, std::size_t,
                          std::size_t);
LabelCounts histogram(PlanesView, std::size_t, std::size_t);
}  // namespace avx2
#endif

#if defined(PSG_ENABLE_NEON)
namespace neon {
std::size_t first_mismatch(PlanesView, std::size_t, PlanesView, std::size_t,
                           std::size_t);
std::size_t last_mismatch(PlanesView, std::size_t, PlanesView, std::size_t,
                          std::size_t);
LabelCounts histogram(PlanesView, std::size_t, std::size_t);
}  // namespace neon
#endif

}  // namespace psg::kernels
