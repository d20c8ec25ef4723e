#include <doctest.h>

#include <random>
#include <vector>

#include "stonework/kernels.hpp"

using namespace stonework;
namespace k = stonework::kernels;

namespace {

std::vector<Mask> random_masks(std::mt19937_64& rng, std::size_t n, Mask within) {
  std::vector<Mask> out(n);
  for (Mask& m : out) m = static_cast<Mask>(rng()) & static_cast<Mask>(rng()) & within;
  return out;
}

std::vector<Mask> fold_naive(const std::vector<Mask>& rows, Mask empty, bool use_or) {
  std::vector<Mask> out(std::size_t{1} << rows.size());
  for (std::size_t s = 0; s < out.size(); ++s) {
    Mask acc = empty;
    for (std::size_t j = 0; j < rows.size(); ++j)
      if ((s >> j) & 1) acc = use_or ? (acc | rows[j]) : (acc & rows[j]);
    out[s] = acc;
  }
  return out;
}

}  // namespace

TEST_CASE("subset folds agree with the naive loop") {
  std::mt19937_64 rng(7);
  for (int rows = 0; rows <= 12; ++rows)
    for (int rep = 0; rep < 5; ++rep) {
      const auto r = random_masks(rng, rows, ~Mask{0});
      const Mask empty = static_cast<Mask>(rng());
      const std::size_t size = std::size_t{1} << rows;
      std::vector<Mask> s(size), a(size);
      k::scalar::subset_fold_or(r, empty, s);
      CHECK(s == fold_naive(r, empty, true));
      k::scalar::subset_fold_and(r, empty, s);
      CHECK(s == fold_naive(r, empty, false));
      if (k::avx2_available()) {
        k::avx2::subset_fold_or(r, empty, a);
        CHECK(a == fold_naive(r, empty, true));
        k::avx2::subset_fold_and(r, empty, a);
        CHECK(a == fold_naive(r, empty, false));
      }
    }
}

TEST_CASE("implication and equivalence scans agree across paths") {
  std::mt19937_64 rng(11);
  for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 257u, 4096u})
    for (int rep = 0; rep < 40; ++rep) {
      const Mask within = rep % 2 ? 0xFFu : ~Mask{0};
      const auto lhs = random_masks(rng, len, within), rhs = random_masks(rng, len, within);
      const Mask a = static_cast<Mask>(rng()) & static_cast<Mask>(rng()) & within & static_cast<Mask>(rng());
      const Mask b = static_cast<Mask>(rng()) & within;
      std::size_t imp = len, eqv = len;
      for (std::size_t g = len; g-- > 0;) {
        if (subset_of(a, lhs[g]) && !subset_of(b, rhs[g])) imp = g;
        if (subset_of(a, lhs[g]) != subset_of(b, rhs[g])) eqv = g;
      }
      CHECK(k::scalar::find_implication_violation(a, b, lhs, rhs) == imp);
      CHECK(k::scalar::find_equivalence_mismatch(a, b, lhs, rhs) == eqv);
      if (k::avx2_available()) {
        CHECK(k::avx2::find_implication_violation(a, b, lhs, rhs) == imp);
        CHECK(k::avx2::find_equivalence_mismatch(a, b, lhs, rhs) == eqv);
      }
    }
}

TEST_CASE("row composition agrees across paths") {
  std::mt19937_64 rng(3);
  for (int n : {1, 3, 8, 9, 17, 32}) {
    const Mask within = full_mask(n);
    const auto a = random_masks(rng, n, within), b = random_masks(rng, n, within);
    std::vector<Mask> naive(n, 0), s(n), v(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (has(a[i], j)) naive[i] |= b[j];
    k::scalar::compose_rows(a, b, s);
    CHECK(s == naive);
    if (k::avx2_available()) {
      k::avx2::compose_rows(a, b, v);
      CHECK(v == naive);
    }
  }
}

TEST_CASE("dispatch can be forced") {
  const k::Isa before = k::active_isa();
  k::force_isa(k::Isa::Scalar);
  CHECK(k::active_isa() == k::Isa::Scalar);
  k::force_isa(k::Isa::Avx2);
  CHECK(k::active_isa() == (k::avx2_available() ? k::Isa::Avx2 : k::Isa::Scalar));
  CHECK(k::isa_name(k::Isa::Scalar) == "scalar");
  k::force_isa(before);
}
