#pragma once

#include <cstdint>
#include <vector>

#include "stonework/core.hpp"
#include "stonework/report.hpp"
#include "stonework/topology.hpp"

namespace stonework {

/// Leaf budget for the closed-set searches behind filter enumeration.
inline constexpr std::int64_t kFilterBudget = std::int64_t{1} << 22;

struct Filter {
  Mask members = 0;
  bool proper = false;
  bool nonempty = false;
};

/// x ≻ y ∈ U ⇒ x ∈ U
bool is_succ_closed(const P0Set& b, Mask u);
/// x, y ∈ U ⇒ ∃z ∈ U (z ≺ x, y)
bool is_prec_directed(const P0Set& b, Mask u);
bool is_prec_filter(const P0Set& b, Mask u);
/// Filter for ⪯ in place of ≺.
bool is_preceq_filter(const P0Set& b, Mask u);
bool is_preceq_directed(const P0Set& b, Mask u);
/// U ⊆ U^≺
bool is_prec_coinitial(const P0Set& b, Mask u);
/// U^≺ = {y : ∃x∈U (x ≺ y)}
Mask prec_up(const P0Set& b, Mask u);
/// Down-closed under ⪯ and upward ⪯-directed.
bool is_preceq_ideal(const P0Set& b, Mask u);

/// Every ≺-filter including ∅ and B, sorted by mask. Throws CapExceeded when
/// the search exceeds `budget` leaves.
std::vector<Filter> enumerate_filters(const P0Set& b, std::int64_t budget = kFilterBudget);
/// Maximal proper filters, sorted. ∅ appears only if it is itself maximal.
std::vector<Mask> enumerate_ultrafilters(const P0Set& b, std::int64_t budget = kFilterBudget);

/// ultrafilter, complement_is_ideal, compy (informational) and, when B is a
/// basic lattice, their equivalence. Throws NotAFilter unless U is a
/// nonempty proper ≺-filter.
Report ultrafilter_properties(const P0Set& b, Mask u);

/// Points are the nonempty ultrafilters; basis[x] = O_x.
struct StoneSpace {
  std::vector<Mask> points;
  FiniteTopology top;
  Mask basic_open(int x) const { return top.basis[x]; }
};

StoneSpace stone_space(const P0Set& b, std::int64_t budget = kFilterBudget);

/// capwedge, cupvee, perpperp, subprec, Oxclosure, hausdorff, iso.
/// Throws PreconditionFailed unless B is a basic lattice.
Report verify_duality(const P0Set& b);

/// Structure on family indices with O ≺ N ⇔ cl(O) ⊆ N and zero = ∅.
/// Throws NotOpen, or PreconditionFailed if ∅ is missing or repeated members.
P0Set basis_to_structure(const FiniteTopology& x, const std::vector<Mask>& family);

/// Members of `family` containing point p, as a mask over family indices.
Mask point_filter(const std::vector<Mask>& family, int p);

/// basic_lattice, stone_points (= |X|), point_filter_bijective for a family
/// over X.
Report basis_round_trip(const FiniteTopology& x, const std::vector<Mask>& family);

}  // namespace stonework
