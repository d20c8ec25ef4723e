#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stonework/bits.hpp"
#include "stonework/error.hpp"
#include "stonework/report.hpp"

namespace stonework {

/// Largest carrier accepted from user input. Internally built structures
/// (enveloping algebras, saturated families) may use up to kMaxElements.
inline constexpr int kMaxLoadSize = 24;

/// A finite carrier with a distinguished zero and a transitive relation ≺
/// having zero as minimum. Immutable; the reflexivization ⪯ and the
/// intersection relation ⋒ are computed once at construction.
///
/// Rows are stored as masks: succ(x) = {y : x ≺ y}, pred(y) = {x : x ≺ y}.
class P0Set {
 public:
  /// Validates Minimum and Transitivity. Throws Error with MissingMinimum,
  /// NotTransitive (witness x,y,z) or IndexOutOfRange.
  static P0Set from_pairs(int size, int zero, std::span<const std::pair<int, int>> prec,
                          std::vector<std::string> names = {}, int cap = kMaxElements);
  static P0Set from_rows(int zero, std::vector<Mask> succ_rows,
                         std::vector<std::string> names = {}, int cap = kMaxElements);

  int size() const { return n_; }
  int zero() const { return zero_; }
  Mask all() const { return full_mask(n_); }
  Mask nonzero() const { return all() & ~bit(zero_); }

  bool prec(int x, int y) const { return has(succ_[x], y); }
  Mask succ(int x) const { return succ_[x]; }
  Mask pred(int y) const { return pred_[y]; }

  /// x ⪯ y ⇔ every z ≺ x satisfies z ≺ y.
  bool preceq(int x, int y) const { return has(up_[x], y); }
  /// {y : x ⪯ y}
  Mask up(int x) const { return up_[x]; }
  /// {y : y ⪯ x}
  Mask down(int x) const { return down_[x]; }

  /// x ⋒ y ⇔ some nonzero z has z ≺ x and z ≺ y.
  bool meets(int x, int y) const { return has(meets_[x], y); }
  bool perp(int x, int y) const { return !meets(x, y); }
  Mask meets_row(int x) const { return meets_[x]; }
  Mask perp_row(int x) const { return all() & ~meets_[x]; }

  bool is_reflexive() const;
  bool is_antisymmetric() const;

  /// The p0set (B, ⪯): the same carrier with ≺ replaced by ⪯.
  P0Set reflexive_view() const;

  std::vector<std::pair<int, int>> pairs() const;
  const std::vector<std::string>& names() const { return names_; }
  std::string name(int x) const;
  std::string format_mask(Mask m) const;

  friend bool operator==(const P0Set& a, const P0Set& b) {
    return a.n_ == b.n_ && a.zero_ == b.zero_ && a.succ_ == b.succ_;
  }

 private:
  P0Set() = default;
  void derive();

  int n_ = 0;
  int zero_ = 0;
  std::vector<Mask> succ_, pred_, up_, down_, meets_;
  std::vector<std::string> names_;
};

/// The derived relations as explicit row masks (row x, bit y).
struct DerivedRels {
  std::vector<Mask> preceq;
  std::vector<Mask> meets;
  std::vector<Mask> perp;
};

DerivedRels derived_relations(const P0Set& b);

/// Greatest lower bound / least upper bound under ⪯. Returns nullopt when no
/// bound exists; throws NotAntisymmetric (witness the two candidates) when
/// several ⪯-equivalent candidates exist.
std::optional<int> meet(const P0Set& b, int x, int y);
std::optional<int> join(const P0Set& b, int x, int y);

/// Full binary meet/join tables under ⪯; -1 marks a missing bound.
struct LatticeTables {
  int n = 0;
  bool antisymmetric = true;
  std::vector<int> antisymmetry_witness;
  std::vector<int> meet;
  std::vector<int> join;

  int m(int x, int y) const { return meet[x * n + y]; }
  int j(int x, int y) const { return join[x * n + y]; }
  bool has_all_meets() const;
  bool has_all_joins() const;
  bool is_lattice() const { return antisymmetric && has_all_meets() && has_all_joins(); }
};

LatticeTables lattice_tables(const P0Set& b);

/// Flags evaluated on the p0set (B, ⪯): antisymmetric, meet_semilattice,
/// lattice, distributive, section_complemented, generalized_boolean,
/// separative, ssc. Lattice-dependent flags are not applicable when the
/// lattice flag fails.
Report order_predicates(const P0Set& b);

/// The unique z with z ∧ (x ∧ y) = 0 and z ∨ (x ∧ y) = x. Throws NotGBA.
int relative_complement(const P0Set& b, int x, int y);

/// Left Auxiliarity (x ≺ z ⪯ y ⇒ x ≺ y) and Domination (x ≺ y ⇒ x ⪯ y).
Report auxiliarity_report(const P0Set& b);

}  // namespace stonework
