#pragma once

#include <vector>

#include "stonework/bits.hpp"

namespace stonework {

/// A topology on points 0..points-1. `opens` is the full open family (sorted,
/// closed under ∪ and ∩); `basis` is a designated generating family, and
/// `basis_source[i]` records which structure element produced basis[i]
/// (-1 when it came from a file).
struct FiniteTopology {
  int points = 0;
  std::vector<Mask> opens;
  std::vector<Mask> basis;
  std::vector<int> basis_source;

  Mask all() const { return full_mask(points); }
  bool is_open(Mask s) const;
  /// Complement of the union of opens disjoint from s.
  Mask closure(Mask s) const;
  Mask interior(Mask s) const;
};

/// Default ceiling on the number of materialized opens.
inline constexpr int kMaxOpens = 1 << 16;

/// Topology whose opens are all unions of `basis` members (plus ∅). The
/// members must form a basis (pairwise intersections are unions of members);
/// this is not checked here. Throws CapExceeded past `max_opens`.
FiniteTopology generated_topology(int points, std::vector<Mask> basis,
                                  std::vector<int> basis_source = {}, int max_opens = kMaxOpens);

FiniteTopology discrete_topology(int points, int max_opens = kMaxOpens);

/// Checks the stored invariants: ∅ and ⋃basis open, opens closed under ∪/∩,
/// every open a union of basis members. Throws Format naming the failure.
void validate_topology(const FiniteTopology& t);

/// Every pair of distinct points lies in disjoint opens.
bool is_hausdorff(const FiniteTopology& t, int* p = nullptr, int* q = nullptr);

}  // namespace stonework
