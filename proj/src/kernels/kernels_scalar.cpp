#include "stonework/kernels.hpp"

namespace stonework::kernels::scalar {

void subset_fold_or(std::span<const Mask> rows, Mask empty, std::span<Mask> out) {
  out[0] = empty;
  std::size_t half = 1;
  for (Mask r : rows) {
    for (std::size_t i = 0; i < half; ++i) out[half + i] = out[i] | r;
    half <<= 1;
  }
}

void subset_fold_and(std::span<const Mask> rows, Mask empty, std::span<Mask> out) {
  out[0] = empty;
  std::size_t half = 1;
  for (Mask r : rows) {
    for (std::size_t i = 0; i < half; ++i) out[half + i] = out[i] & r;
    half <<= 1;
  }
}

std::size_t find_implication_violation(Mask a, Mask b, std::span<const Mask> lhs,
                                       std::span<const Mask> rhs) {
  for (std::size_t g = 0; g < lhs.size(); ++g)
    if ((a & ~lhs[g]) == 0 && (b & ~rhs[g]) != 0) return g;
  return lhs.size();
}

std::size_t find_equivalence_mismatch(Mask a, Mask b, std::span<const Mask> lhs,
                                      std::span<const Mask> rhs) {
  for (std::size_t g = 0; g < lhs.size(); ++g)
    if (((a & ~lhs[g]) == 0) != ((b & ~rhs[g]) == 0)) return g;
  return lhs.size();
}

void compose_rows(std::span<const Mask> a, std::span<const Mask> b, std::span<Mask> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    Mask acc = 0;
    for (Mask m = a[i]; m; m &= m - 1) acc |= b[lowest(m)];
    out[i] = acc;
  }
}

}  // namespace stonework::kernels::scalar
