// Compiled with -mavx2; only reached when the CPU reports AVX2.
#include <immintrin.h>

#include "stonework/kernels.hpp"

namespace stonework::kernels::avx2 {

namespace {

inline __m256i load(const Mask* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Mask* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

// Lanes where (x & ~m) == 0, as all-ones.
inline __m256i contained(__m256i x, __m256i m) {
  return _mm256_cmpeq_epi32(_mm256_andnot_si256(m, x), _mm256_setzero_si256());
}

template <bool IsOr>
void fold(std::span<const Mask> rows, Mask empty, std::span<Mask> out) {
  out[0] = empty;
  std::size_t half = 1;
  for (Mask r : rows) {
    std::size_t i = 0;
    const __m256i rv = _mm256_set1_epi32(static_cast<int>(r));
    for (; i + 8 <= half; i += 8) {
      const __m256i x = load(&out[i]);
      store(&out[half + i], IsOr ? _mm256_or_si256(x, rv) : _mm256_and_si256(x, rv));
    }
    for (; i < half; ++i) out[half + i] = IsOr ? (out[i] | r) : (out[i] & r);
    half <<= 1;
  }
}

}  // namespace

void subset_fold_or(std::span<const Mask> rows, Mask empty, std::span<Mask> out) {
  fold<true>(rows, empty, out);
}

void subset_fold_and(std::span<const Mask> rows, Mask empty, std::span<Mask> out) {
  fold<false>(rows, empty, out);
}

std::size_t find_implication_violation(Mask a, Mask b, std::span<const Mask> lhs,
                                       std::span<const Mask> rhs) {
  const std::size_t n = lhs.size();
  const __m256i av = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i bv = _mm256_set1_epi32(static_cast<int>(b));
  std::size_t g = 0;
  for (; g + 8 <= n; g += 8) {
    __m256i hit = _mm256_andnot_si256(contained(bv, load(&rhs[g])), contained(av, load(&lhs[g])));
    int bits = _mm256_movemask_ps(_mm256_castsi256_ps(hit));
    if (bits) return g + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(bits)));
  }
  for (; g < n; ++g)
    if ((a & ~lhs[g]) == 0 && (b & ~rhs[g]) != 0) return g;
  return n;
}

std::size_t find_equivalence_mismatch(Mask a, Mask b, std::span<const Mask> lhs,
                                      std::span<const Mask> rhs) {
  const std::size_t n = lhs.size();
  const __m256i av = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i bv = _mm256_set1_epi32(static_cast<int>(b));
  std::size_t g = 0;
  for (; g + 8 <= n; g += 8) {
    __m256i diff = _mm256_xor_si256(contained(av, load(&lhs[g])), contained(bv, load(&rhs[g])));
    int bits = _mm256_movemask_ps(_mm256_castsi256_ps(diff));
    if (bits) return g + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(bits)));
  }
  for (; g < n; ++g)
    if (((a & ~lhs[g]) == 0) != ((b & ~rhs[g]) == 0)) return g;
  return n;
}

// Gathers b rows for each set bit of a[i]; rows of a are processed eight at a
// time by walking bit positions and blending the broadcast b[j] where set.
void compose_rows(std::span<const Mask> a, std::span<const Mask> b, std::span<Mask> out) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i rows = load(&a[i]);
    __m256i acc = _mm256_setzero_si256();
    Mask any = 0;
    for (std::size_t k = 0; k < 8; ++k) any |= a[i + k];
    for (Mask m = any; m; m &= m - 1) {
      const int j = lowest(m);
      const __m256i sel = _mm256_cmpeq_epi32(
          _mm256_and_si256(rows, _mm256_set1_epi32(static_cast<int>(bit(j)))),
          _mm256_set1_epi32(static_cast<int>(bit(j))));
      acc = _mm256_or_si256(acc, _mm256_and_si256(sel, _mm256_set1_epi32(static_cast<int>(b[j]))));
    }
    store(&out[i], acc);
  }
  for (; i < n; ++i) {
    Mask acc = 0;
    for (Mask m = a[i]; m; m &= m - 1) acc |= b[lowest(m)];
    out[i] = acc;
  }
}

}  // namespace stonework::kernels::avx2
