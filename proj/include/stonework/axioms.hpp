#pragma once

#include <optional>
#include <span>
#include <vector>

#include "stonework/core.hpp"
#include "stonework/report.hpp"

namespace stonework {

/// Verdicts for Minimum, Transitivity, lattice, Coinitiality, Cofinality,
/// Interpolation, Multiplicativity, Additivity, Decomposition,
/// Complementation. Distributivity, RatherBelow, PrecBelow,
/// RightAuxiliarity, RieszInterpolation and VeeInterpolation follow as
/// informational verdicts. passed() is the basic-lattice verdict.
Report check_basic_lattice(const P0Set& b);

/// Compares {Interpolation, Multiplicativity, Additivity} against
/// {RightAuxiliarity, RieszInterpolation}. Throws NotLattice or
/// PreconditionFailed (Cofinality).
Report check_alternate_axioms(const P0Set& b);

/// R(x,y) ⇔ ∀z ∃w⊥x (z ⪯ w∨y), as succ-style row masks. Throws NotLattice.
std::vector<Mask> recover_prec(const P0Set& b);

/// Fewest members of `sets` whose union contains `target`; nullopt when even
/// all of them fall short. Returns the chosen indices.
std::optional<std::vector<int>> min_cover(Mask target, std::span<const Mask> sets);

/// Smallest tuple v₁…vₖ with vᵢ ≺ wᵢ ≺ y covering the nonzero part of x's
/// predecessors by ⋒; nullopt if none exists. φₙ(x,y) ⇔ x≺y and no cover of
/// size ≤ n.
std::optional<std::vector<int>> phi_cover(const P0Set& b, int x, int y);
bool phi_holds(const P0Set& b, int x, int y, int n);

/// Smallest cover defeating ψ: first entry is y', the rest are the vᵢ.
std::optional<std::vector<int>> psi_cover(const P0Set& b, int x, int y, int z);
bool psi_holds(const P0Set& b, int x, int y, int z, int n);

/// θₙ. When it fails and `witness` is given, it receives (x, y, w₁…wₖ).
bool theta_holds(const P0Set& b, int n, std::vector<int>* witness = nullptr);

/// The evaluation bound for "all n": |B|².
inline int type_bound(const P0Set& b) { return b.size() * b.size(); }

/// meet_semilattice, Minimum, Transitivity, Coinitiality, Multiplicativity,
/// theta_1, theta_n (all n ≤ |B|²), phi_omitted, psi_omitted.
Report check_basic_semilattice(const P0Set& b);

}  // namespace stonework
