#pragma once

#include <vector>

#include "stonework/core.hpp"
#include "stonework/report.hpp"
#include "stonework/stone.hpp"

namespace stonework {

/// A relation ⊏ from source to target; rel[x] holds the y with x ⊏ y.
struct Interpolator {
  P0Set source;
  P0Set target;
  std::vector<Mask> rel;

  bool related(int x, int y) const { return has(rel[x], y); }
};

/// The structure's own ≺, as a relation from B to itself.
Interpolator identity_interpolator(const P0Set& b);

/// Minimum, Cofinality, target_interpolation, source_interpolation,
/// Multiplicativity, Additivity, Decomposition; then the two derived
/// auxiliarity laws and zero_reflecting (x ⊏ 0 ⇒ x = 0, which the induced
/// Stone map needs) as informational verdicts. Throws PreconditionFailed
/// unless both ends are basic lattices.
Report is_interpolator(const Interpolator& r);

/// x (R∘S) z ⇔ ∃y (x R y S z). Throws DimensionMismatch.
Interpolator compose_interpolators(const Interpolator& r, const Interpolator& s);

/// U ↦ U^⊏ between Stone spaces, with its checks.
struct StoneMap {
  StoneSpace from;
  StoneSpace to;
  std::vector<int> image;
  Report report;
};

/// Throws NotInterpolator if is_interpolator fails, NotUltrafilter if some
/// U^⊏ is not a point of the target space (seen when zero_reflecting fails).
StoneMap induced_stone_map(const Interpolator& r);

/// O ⊏ N ⇔ f[cl(O)] ⊆ N over basis_to_structure of each family.
/// Throws NotContinuous (witness: an open of Y with non-open preimage).
Interpolator interpolator_from_map(const std::vector<int>& f, const FiniteTopology& x,
                                   const std::vector<Mask>& bx, const FiniteTopology& y,
                                   const std::vector<Mask>& by);

/// Preimage of s under f, as points of the domain.
Mask preimage(const std::vector<int>& f, Mask s);
/// Image of s under f.
Mask image_of(const std::vector<int>& f, Mask s);

/// For the interpolator built from f: the induced Stone map sends the point
/// filter of p to the point filter of f(p), for every p.
Report map_round_trip(const std::vector<int>& f, const FiniteTopology& x,
                      const std::vector<Mask>& bx, const FiniteTopology& y,
                      const std::vector<Mask>& by);

}  // namespace stonework
