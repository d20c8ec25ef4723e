#pragma once

#include <cstdint>
#include <vector>

#include "stonework/core.hpp"
#include "stonework/report.hpp"
#include "stonework/topology.hpp"

namespace stonework {

/// Nonzero tight characters φ : B → {0,1}, each stored as φ⁻¹{1}. Sorted.
struct CharacterSet {
  P0Set base;
  std::vector<Mask> chars;

  int size() const { return static_cast<int>(chars.size()); }
  /// O_x as a mask over character indices.
  Mask basic_open(int x) const;
};

/// The 2-element generalized Boolean algebra {0 < 1}.
P0Set two_element_algebra();

/// Walks the ⪯-up-closed sets avoiding 0 and keeps U ≠ ∅ with U ⋦ B ∖ U
/// failing, which is what tightness reduces to for {0,1}-valued maps.
/// CapExceeded if the walk exceeds `budget` leaves.
CharacterSet tight_characters(const P0Set& b, std::int64_t budget = std::int64_t{1} << 22);
/// Every nonzero φ checked with map_properties. Carrier ≤ 10.
CharacterSet tight_characters_literal(const P0Set& b);
/// Same, keeping the tightish ones. Carrier ≤ 10.
CharacterSet tightish_characters_literal(const P0Set& b);

/// Maximal C ⊆ B with F_⪰ ≠ {0} for every F ⊆ C. Sorted. Carrier ≤ 12.
std::vector<Mask> maximal_centred_sets(const P0Set& b);

struct PseudobasisReport {
  Report report{"pseudobasis"};
  std::vector<bool> clopen;
  std::vector<bool> compact;

  bool passed() const { return report.passed(); }
};

/// Minimum, cover, coinitiality and t0 evaluated on `family`; witnesses are
/// point indices or open masks. Throws NotOpen.
PseudobasisReport is_pseudobasis(const FiniteTopology& x, const std::vector<Mask>& family);

/// The spectrum as a discrete space over the characters, with O_x kept as
/// basis[x] (basis_source[x] = x).
struct SpectrumSpace {
  CharacterSet chars;
  FiniteTopology top;
  /// pseudobasis verdicts of (O_x), plus dense (characters = maximal
  /// centred sets, as indicator sets).
  Report report;
};

SpectrumSpace spectrum_space(const P0Set& b);

struct Homeomorphism {
  /// The family ordered by ⊆ with zero = ∅.
  P0Set structure;
  /// phi[p] = {O ∈ family : p ∈ O} as a mask over family indices.
  std::vector<Mask> phi;
  /// Index of phi[p] in tight_characters(structure).
  std::vector<int> character_index;
  Report report;
};

/// x ↦ φ_x for a compact clopen pseudobasis. Verdicts: phi_tight,
/// bijective, images_are_basic_opens, cover_formula (F ⪅ G ⇔ ⋂F ⊆ ⋃G, for
/// families of at most 12 members). Throws NotPseudobasis, NotClopen.
Homeomorphism spectrum_homeomorphism(const FiniteTopology& x, const std::vector<Mask>& family);

/// separative, injective and order_isomorphism (informational), the
/// pseudobasis verdicts of (O_x), clopen, and characterization: the
/// order-isomorphism holds exactly when B is separative. Checked verdicts
/// are n/a unless (B, ⪯) is a partial order. Carrier ≤ 10.
Report verify_pseudochar(const P0Set& b);

/// separative, rho_injective, ssc (informational), chain_respected, and
/// semilattice_equivalence (n/a unless (B, ⪯) is a meet semilattice). Both
/// are n/a when ⪯ is not antisymmetric.
Report separativity_chain(const P0Set& b);

/// φ ↦ φ∘ρ from the characters of the enveloping algebra S onto those of B,
/// and characters of S versus ultrafilters of S. n/a unless ⪯ is
/// antisymmetric. Carrier ≤ 8.
Report spectrum_vs_stone(const P0Set& b);

}  // namespace stonework
