#include <doctest.h>

#include <random>
#include <vector>

#include "psg/kernels.hpp"

using namespace psg;
using namespace psg::kernels;

namespace {

struct Planes {
  std::vector<std::uint64_t> left, right;
  std::size_t size;

  Planes(std::size_t n, std::mt19937_64& rng, double density)
      : left((n + 63) / 64 + kPlanePadWords), right(left.size()), size(n) {
    std::bernoulli_distribution bit(density);
    for (std::size_t i = 0; i < n; ++i) {
      if (bit(rng)) left[i / 64] |= 1ULL << (i % 64);
      if (bit(rng)) right[i / 64] |= 1ULL << (i % 64);
    }
  }
  PlanesView view() const { return {left.data(), right.data(), size}; }
  void flip(std::size_t i) { left[i / 64] ^= 1ULL << (i % 64); }
};

}  // namespace

TEST_CASE("scalar and word tables are always available") {
  CHECK(table_for(Isa::Scalar) != nullptr);
  CHECK(table_for(Isa::Word) != nullptr);
  CHECK(available().front() == Isa::Scalar);
  CHECK(isa_from_string("avx2") == Isa::Avx2);
  CHECK(!isa_from_string("sse9"));
  for (Isa isa : available()) CHECK(isa_from_string(to_string(isa)) == isa);
}

TEST_CASE("every kernel variant agrees with the scalar reference") {
  std::mt19937_64 rng(42);
  const KernelTable& ref = *table_for(Isa::Scalar);
  for (Isa isa : available()) {
    CAPTURE(to_string(isa));
    const KernelTable& t = *table_for(isa);
    for (int round = 0; round < 300; ++round) {
      const std::size_t n = 1 + rng() % 3000;
      Planes x(n, rng, 0.5);
      // y is a shifted copy of x with a few flipped bits so mismatches are
      // sparse and land at every alignment.
      Planes y = x;
      const int flips = static_cast<int>(rng() % 4);
      for (int f = 0; f < flips; ++f) y.flip(rng() % n);
      const std::size_t xo = rng() % n;
      const std::size_t yo = rng() % n;
      const std::size_t len = rng() % (n - std::max(xo, yo) + 1);
      CHECK(t.first_mismatch(x.view(), xo, y.view(), yo, len) ==
            ref.first_mismatch(x.view(), xo, y.view(), yo, len));
      CHECK(t.last_mismatch(x.view(), xo, y.view(), yo, len) ==
            ref.last_mismatch(x.view(), xo, y.view(), yo, len));
      CHECK(t.first_mismatch(x.view(), xo, y.view(), xo, len) ==
            ref.first_mismatch(x.view(), xo, y.view(), xo, len));
      CHECK(t.last_mismatch(x.view(), xo, y.view(), xo, len) ==
            ref.last_mismatch(x.view(), xo, y.view(), xo, len));
      const std::size_t off = rng() % n;
      const std::size_t hlen = rng() % (n - off + 1);
      CHECK(t.histogram(x.view(), off, hlen) == ref.histogram(x.view(), off, hlen));
    }
  }
}

TEST_CASE("scalar reference semantics") {
  std::mt19937_64 rng(1);
  Planes x(200, rng, 0.5);
  Planes y = x;
  const KernelTable& ref = *table_for(Isa::Scalar);
  CHECK(ref.first_mismatch(x.view(), 0, y.view(), 0, 200) == kNoMismatch);
  y.flip(77);
  y.flip(150);
  CHECK(ref.first_mismatch(x.view(), 0, y.view(), 0, 200) == 77);
  CHECK(ref.last_mismatch(x.view(), 0, y.view(), 0, 200) == 150);
  CHECK(ref.first_mismatch(x.view(), 10, y.view(), 10, 50) == kNoMismatch);
  const LabelCounts c = ref.histogram(x.view(), 0, 200);
  CHECK(c.p + c.n + c.l + c.r == 200);
}

TEST_CASE("force switches the active table") {
  const Isa before = active().isa;
  CHECK(force(Isa::Scalar));
  CHECK(active().isa == Isa::Scalar);
  CHECK(force(before));
  CHECK(active().isa == before);
}
