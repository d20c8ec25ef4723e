#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "stonework/bits.hpp"

// Bulk mask kernels behind the exhaustive subset-pair sweeps. Each has a
// scalar reference version and an AVX2 version; the active one is picked at
// first use from the CPU, and STONEWORK_ISA=scalar forces the reference path.
namespace stonework::kernels {

enum class Isa { Scalar, Avx2 };

Isa active_isa();
std::string_view isa_name(Isa isa);
bool avx2_available();
/// Overrides the runtime choice. Forcing Avx2 on a CPU without it is ignored.
void force_isa(Isa isa);

/// out[0] = empty; out[2^j + i] = out[i] | rows[j]. out.size() must be 2^rows.size().
void subset_fold_or(std::span<const Mask> rows, Mask empty, std::span<Mask> out);
/// Same with &.
void subset_fold_and(std::span<const Mask> rows, Mask empty, std::span<Mask> out);

/// First g with a ⊆ lhs[g] and b ⊄ rhs[g]; lhs.size() if none.
std::size_t find_implication_violation(Mask a, Mask b, std::span<const Mask> lhs,
                                       std::span<const Mask> rhs);
/// First g where (a ⊆ lhs[g]) differs from (b ⊆ rhs[g]); lhs.size() if none.
std::size_t find_equivalence_mismatch(Mask a, Mask b, std::span<const Mask> lhs,
                                      std::span<const Mask> rhs);

/// out[i] = OR of b[j] over j in a[i]  (relational composition on row masks).
void compose_rows(std::span<const Mask> a, std::span<const Mask> b, std::span<Mask> out);

namespace scalar {
void subset_fold_or(std::span<const Mask> rows, Mask empty, std::span<Mask> out);
void subset_fold_and(std::span<const Mask> rows, Mask empty, std::span<Mask> out);
std::size_t find_implication_violation(Mask a, Mask b, std::span<const Mask> lhs,
                                       std::span<const Mask> rhs);
std::size_t find_equivalence_mismatch(Mask a, Mask b, std::span<const Mask> lhs,
                                      std::span<const Mask> rhs);
void compose_rows(std::span<const Mask> a, std::span<const Mask> b, std::span<Mask> out);
}  // namespace scalar

namespace avx2 {
void subset_fold_or(std::span<const Mask> rows, Mask empty, std::span<Mask> out);
void subset_fold_and(std::span<const Mask> rows, Mask empty, std::span<Mask> out);
std::size_t find_implication_violation(Mask a, Mask b, std::span<const Mask> lhs,
                                       std::span<const Mask> rhs);
std::size_t find_equivalence_mismatch(Mask a, Mask b, std::span<const Mask> lhs,
                                      std::span<const Mask> rhs);
void compose_rows(std::span<const Mask> a, std::span<const Mask> b, std::span<Mask> out);
}  // namespace avx2

}  // namespace stonework::kernels
