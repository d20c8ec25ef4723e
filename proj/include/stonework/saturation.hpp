#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stonework/core.hpp"
#include "stonework/report.hpp"

namespace stonework {

/// Largest carrier for which subset tables (2^n entries each) are built.
inline constexpr int kMaxSubsetCarrier = 12;

/// Relations between subsets of B, backed by tables over all 2^n subsets.
/// Throws CapExceeded above kMaxSubsetCarrier.
class SubsetCalculus {
 public:
  explicit SubsetCalculus(const P0Set& b);

  const P0Set& base() const { return b_; }
  int subsets() const { return static_cast<int>(below_.size()); }

  /// C^≻ = {x : x ≺ c for some c ∈ C}
  Mask below(Mask c) const { return below_[c]; }
  /// C^⋒ = {x : x ⋒ c for some c ∈ C}
  Mask meeting(Mask c) const { return meeting_[c]; }
  /// C^⪰ = {x : x ⪯ c for some c ∈ C}
  Mask lower(Mask c) const { return lower_[c]; }

  /// C ⊆ D^≻
  bool prec(Mask c, Mask d) const { return subset_of(c, below_[d]); }
  /// C^≻ ⊆ D^⋒ ∪ {0}
  bool precsim(Mask c, Mask d) const { return subset_of(below_[c], meeting_[d] | zero_bit_); }
  /// C^⪰ ⊆ D^⋒ ∪ {0}
  bool preceqsim(Mask c, Mask d) const { return subset_of(lower_[c], meeting_[d] | zero_bit_); }
  /// ∃F (C ⪍ F ≺ D). ⪍ only grows with F, so F = D^≻ decides it.
  bool wayb(Mask c, Mask d) const { return precsim(c, below_[d]); }
  /// A^∪ = {y : {y} ⪻ A}
  Mask saturate(Mask a) const { return sat_[a]; }
  /// {c ∧ d : c ∈ C, d ∈ D}; nullopt if some meet is missing.
  std::optional<Mask> wedge(Mask c, Mask d) const;

 private:
  P0Set b_;
  Mask zero_bit_ = 0;
  std::vector<Mask> below_, meeting_, lower_, sat_;
  std::vector<int> meet_;
};

struct SubsetRelations {
  bool prec = false;
  bool precsim = false;
  bool wayb = false;
  friend bool operator==(const SubsetRelations&, const SubsetRelations&) = default;
};

/// ≺, ⪍ and ⪻ between C and D. Throws CapExceeded above kMaxSubsetCarrier.
SubsetRelations subset_relations(const P0Set& b, Mask c, Mask d);
/// Same, with ⪻ decided by trying every F ⊆ B as the witness.
SubsetRelations subset_relations_exhaustive(const P0Set& b, Mask c, Mask d);

Mask saturate(const P0Set& b, Mask a);

enum class Generators { Singletons, Finite, All };

/// Saturated sets ordered by (size, mask), so ⊆ respects index order.
struct SaturatedFamily {
  P0Set base;
  std::vector<Mask> sets;
  /// Index of saturate(S ∪ T), or -1 if it is not a member.
  std::vector<int> join;
  /// Index of S ∩ T, or -1 if it is not a member.
  std::vector<int> meet;

  int size() const { return static_cast<int>(sets.size()); }
  int index_of(Mask s) const;
  int j(int a, int b) const { return join[a * size() + b]; }
  int m(int a, int b) const { return meet[a * size() + b]; }
};

/// Singletons: {x}^∪ for each x. All: A^∪ for every A ⊆ B. Finite: ∅^∪ and
/// the {x}^∪ closed under S, T ↦ (S ∪ T)^∪. Carrier ≤ 10.
SaturatedFamily saturated_family(const P0Set& b, Generators g);

/// families_agree, supP, CcapD, distributive, way_below, continuous, ISO,
/// FBL, singleton_density, without checking B itself. Carrier ≤ 8.
Report frame_report(const P0Set& b);
/// frame_report behind the basic semilattice precondition.
Report verify_frame(const P0Set& b);

/// How the clause sweeps visit tuples of subsets: every tuple when there are
/// at most `exhaustive_limit` of them, otherwise `samples` seeded draws.
struct LawSweep {
  std::int64_t exhaustive_limit = std::int64_t{1} << 20;
  std::int64_t samples = 20000;
  std::uint64_t seed = 0;
};

/// Each clause holds outright, or needs B coinitial (n/a otherwise); the meet
/// clauses also need (B, ⪯) to be a meet semilattice.
///
/// Clauses about ≺ and ⪍ on subsets: transitivity, union additivity, meet
/// multiplicativity, C ⪯ D ⇒ C ⪍ D, and ⪍ agreeing with its ⪰ variant.
Report precprops_laws(const P0Set& b, const LawSweep& sweep = {});
/// Clauses about ⪻: transitivity, additivity, multiplicativity, F ≺ D ⇒
/// F ⪻ D, interpolation through some G ≺ D, and absorption of ⪍.
Report wayb_laws(const P0Set& b, const LawSweep& sweep = {});
/// Clauses about A^∪: F ⊆ A^∪ ⇔ F ⪻ A, invariance of ⪻ under saturation,
/// the chain of equal saturations, A^∪ ⪍ A, and monotonicity.
Report saturation_laws(const P0Set& b, const LawSweep& sweep = {});

}  // namespace stonework
