#include <atomic>
#include <cstdlib>
#include <string_view>

#include "stonework/kernels.hpp"

namespace stonework::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(STONEWORK_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect() {
  if (const char* env = std::getenv("STONEWORK_ISA"); env && std::string_view(env) == "scalar")
    return Isa::Scalar;
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<int>& chosen() {
  static std::atomic<int> isa{static_cast<int>(detect())};
  return isa;
}

bool use_avx2() {
#ifdef STONEWORK_HAVE_AVX2
  return chosen().load(std::memory_order_relaxed) == static_cast<int>(Isa::Avx2);
#else
  return false;
#endif
}

}  // namespace

bool avx2_available() { return cpu_has_avx2(); }

Isa active_isa() { return static_cast<Isa>(chosen().load()); }

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void force_isa(Isa isa) {
  if (isa == Isa::Avx2 && !cpu_has_avx2()) return;
  chosen().store(static_cast<int>(isa));
}

#ifdef STONEWORK_HAVE_AVX2
#define STONEWORK_DISPATCH(fn, ...) (use_avx2() ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define STONEWORK_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

void subset_fold_or(std::span<const Mask> rows, Mask empty, std::span<Mask> out) {
  STONEWORK_DISPATCH(subset_fold_or, rows, empty, out);
}

void subset_fold_and(std::span<const Mask> rows, Mask empty, std::span<Mask> out) {
  STONEWORK_DISPATCH(subset_fold_and, rows, empty, out);
}

std::size_t find_implication_violation(Mask a, Mask b, std::span<const Mask> lhs,
                                       std::span<const Mask> rhs) {
  return STONEWORK_DISPATCH(find_implication_violation, a, b, lhs, rhs);
}

std::size_t find_equivalence_mismatch(Mask a, Mask b, std::span<const Mask> lhs,
                                      std::span<const Mask> rhs) {
  return STONEWORK_DISPATCH(find_equivalence_mismatch, a, b, lhs, rhs);
}

void compose_rows(std::span<const Mask> a, std::span<const Mask> b, std::span<Mask> out) {
  STONEWORK_DISPATCH(compose_rows, a, b, out);
}

}  // namespace stonework::kernels
