#pragma once

#include <vector>

#include "stonework/core.hpp"
#include "stonework/report.hpp"

// Everything here reads a structure through ⪯: covers, tightness, the
// Alexandroff topology and the enveloping algebra ignore how ≺ differs from ⪯.
namespace stonework {

/// C_⪰, the common ⪯-lower bounds; lower_bounds(∅) = B.
Mask lower_bounds(const P0Set& b, Mask c);
/// C ⪅ D ⇔ C_⪰ ⊆ D^⋒ ∪ {0}
bool covers(const P0Set& b, Mask c, Mask d);

/// A zero-preserving candidate map; assignment[x] is a target index.
struct StructMap {
  P0Set source;
  P0Set target;
  std::vector<int> assignment;

  int operator()(int x) const { return assignment[x]; }
  /// β[F] as a target mask.
  Mask image(Mask f) const;
};

/// Checks lengths and index ranges (DimensionMismatch, IndexOutOfRange).
StructMap make_map(P0Set source, P0Set target, std::vector<int> assignment);

/// tight, tightish, coinitial, representation, character, all
/// informational. Source carrier ≤ 12. Throws ZeroNotPreserved.
Report map_properties(const StructMap& beta);

/// Clauses (a)-(d) relating tightness to covers, meets and joins, and
/// Boolean homomorphisms; a clause whose structural precondition fails is
/// n/a. (d) needs source carrier ≤ 8.
Report verify_tight_equivalences(const StructMap& beta);

struct AlexandroffOps {
  Mask closure = 0;
  Mask interior = 0;
  Mask regularize = 0;
};
/// Operations of the Alexandroff topology on B′ = B ∖ {0} whose closed sets
/// are the ⪯-up-closed ones. Y is intersected with B′ first.
AlexandroffOps alexandroff_ops(const P0Set& b, Mask y);
Mask regularize(const P0Set& b, Mask y);
/// reg({x}^⪰ ∖ {0})
Mask rho(const P0Set& b, int x);

/// The generalized Boolean subalgebra of RO(B′) generated by ρ[B].
/// Elements are sorted by (size, mask), so ∅ is index 0.
struct RegularOpenAlgebra {
  P0Set base;
  std::vector<Mask> elements;
  std::vector<int> meet, join, minus;
  std::vector<int> rho;

  int size() const { return static_cast<int>(elements.size()); }
  int index_of(Mask s) const;
  int m(int a, int b) const { return meet[a * size() + b]; }
  int j(int a, int b) const { return join[a * size() + b]; }
  int d(int a, int b) const { return minus[a * size() + b]; }
  /// The algebra ordered by ⊆, zero at index 0. Names list the members.
  P0Set as_structure() const;
};

/// Carrier ≤ 14, at most 32 elements (CapExceeded otherwise).
RegularOpenAlgebra enveloping_algebra(const P0Set& b);

/// F ⪅ G ⇔ ⋀ρ[F] ⊆ ⋁ρ[G] for every pair, with ⋀ρ[∅] = B′ and joins as
/// regularized unions. Carrier ≤ 12.
Report verify_fgrho(const P0Set& b);

/// x ↦ {x}^⪰ ∖ {0} into the Alexandroff opens, O ↦ reg(O) into RO(B′) and
/// ρ itself: tightness, coinitiality, meet preservation. Carrier ≤ 6.
Report verify_alexandroff_maps(const P0Set& b);

enum class ExtensionOrder { LowestFirst, HighestFirst };

struct TightFactor {
  RegularOpenAlgebra algebra;
  StructMap pi;
  Report report;
};

/// π : S → A with π∘ρ = β, built by meet closure, join closure and then
/// repeated L_x extensions. The report checks factorization, the Boolean
/// homomorphism laws, uniqueness, order independence and tightness.
/// Throws NotTightish, PreconditionFailed (target not a generalized Boolean
/// algebra, or a nonzero source element ⪯ zero) or ConstructionIncomplete.
TightFactor factor_tight(const StructMap& beta, ExtensionOrder order = ExtensionOrder::LowestFirst);

/// Only the construction, without the report.
std::vector<int> factor_map(const StructMap& beta, const RegularOpenAlgebra& s, ExtensionOrder order);

/// π_β : S_B → S_A from factoring ρ_A∘β; square_commutes and
/// identity_law. Throws NotTightish, or PreconditionFailed when either end has
/// a nonzero element ⪯ zero.
Report naturality_square(const StructMap& beta);
/// π_{β′∘β} = π_{β′}∘π_β. Throws DimensionMismatch, NotTightish.
Report functor_law(const StructMap& beta, const StructMap& beta2);

/// π_β as a map between enveloping algebras.
StructMap induced_algebra_map(const StructMap& beta);

/// Maps C2 → ... style helper: β' ∘ β.
StructMap compose_maps(const StructMap& beta, const StructMap& beta2);

}  // namespace stonework
