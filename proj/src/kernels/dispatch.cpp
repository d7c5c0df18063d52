#include <atomic>
#include <cstdlib>

#include "psg/kernels.hpp"

namespace psg::kernels {
namespace {

constexpr KernelTable kScalar{Isa::Scalar, &scalar::first_mismatch,
                              &scalar::last_mismatch, &scalar::histogram};
constexpr KernelTable kWord{Isa::Word, &word::first_mismatch,
                            &word::last_mismatch, &word::histogram};
#if defined(PSG_ENABLE_AVX2)
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::first_mismatch,
                            &avx2::last_mismatch, &avx2::histogram};
#endif
#if defined(PSG_ENABLE_NEON)
constexpr KernelTable kNeon{Isa::Neon, &neon::first_mismatch,
                            &neon::last_mismatch, &neon::histogram};
#endif

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
    case Isa::Word:
      return true;
    case Isa::Avx2:
#if defined(PSG_ENABLE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(PSG_ENABLE_NEON)
      return true;  // baseline on aarch64
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* select_default() {
  if (const char* env = std::getenv("PSG_ISA")) {
    if (auto isa = isa_from_string(env)) {
      if (const KernelTable* t = table_for(*isa)) return t;
    }
  }
  return table_for(available().back());
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{select_default()};
  return slot;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Word: return "word";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "?";
}

std::optional<Isa> isa_from_string(std::string_view name) {
  for (Isa isa : {Isa::Scalar, Isa::Word, Isa::Avx2, Isa::Neon}) {
    if (to_string(isa) == name) return isa;
  }
  return std::nullopt;
}

const KernelTable* table_for(Isa isa) {
  if (!cpu_supports(isa)) return nullptr;
  switch (isa) {
    case Isa::Scalar: return &kScalar;
    case Isa::Word: return &kWord;
#if defined(PSG_ENABLE_AVX2)
    case Isa::Avx2: return &kAvx2;
#endif
#if defined(PSG_ENABLE_NEON)
    case Isa::Neon: return &kNeon;
#endif
    default: return nullptr;
  }
}

std::vector<Isa> available() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Word, Isa::Avx2, Isa::Neon}) {
    if (table_for(isa)) out.push_back(isa);
  }
  return out;
}

const KernelTable& active() {
  return *active_slot().load(std::memory_order_acquire);
}

bool force(Isa isa) {
  const KernelTable* t = table_for(isa);
  if (!t) return false;
  active_slot().store(t, std::memory_order_release);
  return true;
}

}  // namespace psg::kernels
