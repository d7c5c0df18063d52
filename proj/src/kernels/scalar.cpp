// Bit-at-a-time reference kernels. Everything else is tested against these.

#include "psg/kernels.hpp"

namespace psg::kernels::scalar {
namespace {

inline unsigned label_bits(PlanesView v, std::size_t pos) {
  const std::size_t q = pos >> 6;
  const unsigned r = static_cast<unsigned>(pos & 63);
  return static_cast<unsigned>((v.left[q] >> r) & 1U) |
         (static_cast<unsigned>((v.right[q] >> r) & 1U) << 1);
}

}  // namespace

std::size_t first_mismatch(PlanesView x, std::size_t xo, PlanesView y,
                           std::size_t yo, std::size_t len) {
  for (std::size_t t = 0; t < len; ++t) {
    if (label_bits(x, xo + t) != label_bits(y, yo + t)) return t;
  }
  return kNoMismatch;
}

std::size_t last_mismatch(PlanesView x, std::size_t xo, PlanesView y,
                          std::size_t yo, std::size_t len) {
  for (std::size_t t = len; t-- > 0;) {
    if (label_bits(x, xo + t) != label_bits(y, yo + t)) return t;
  }
  return kNoMismatch;
}

LabelCounts histogram(PlanesView v, std::size_t off, std::size_t len) {
  LabelCounts c;
  for (std::size_t t = 0; t < len; ++t) {
    switch (static_cast<Label>(label_bits(v, off + t))) {
      case Label::P: ++c.p; break;
      case Label::L: ++c.l; break;
      case Label::R: ++c.r; break;
      case Label::N: ++c.n; break;
    }
  }
  return c;
}

}  // namespace psg::kernels::scalar
