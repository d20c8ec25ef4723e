#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stonework/core.hpp"

namespace stonework {

/// Named structures. diamond n: 0, n atoms, top. powerset n: subsets of
/// {1..n} under ⊆ (n ≤ 4). chain n: 0 < a < b < ... with n nonzero elements.
/// antichain n: 0 below n atoms. vee: 0 below atoms x, y.
/// witness: 0, p, q, x, y with p, q ≺ x ≺ y, p ≺ p, q ≺ q; x and y are not
/// self-related. Throws UnknownFamily, CapExceeded.
P0Set make_family(std::string_view name, int n);
std::vector<std::string> family_names();

/// Deterministic per (n, seed, reflexive, density). Reflexive mode closes a
/// random DAG on the nonzero elements into a partial order with bottom 0;
/// otherwise a random relation on the nonzero elements is transitively closed
/// and 0 is placed below everything. density is the edge probability before
/// closing. n ≤ 12.
P0Set random_p0set(int n, std::uint64_t seed, bool reflexive, double density);

inline constexpr int kMaxEnumerate = 5;
inline constexpr int kMaxEnumerateOrders = 6;

/// Every transitive relation with minimum 0 on n labeled elements, or every
/// partial order with bottom 0 when reflexive_only. Visiting stops early if
/// visit returns false. n ≤ 5, or n ≤ 6 for partial orders. Returns the
/// number visited.
std::int64_t enumerate_structures(int n, bool reflexive_only, const std::function<bool(const P0Set&)>& visit);
std::vector<P0Set> all_structures(int n, bool reflexive_only);

struct SuiteInfo {
  std::string name;
  std::string description;
};
std::vector<SuiteInfo> search_suites();

/// The first structure violating the named property: first exhaustively by
/// size 1..min(bound, 4) in enumeration order, then `budget` random
/// structures of size 2..bound. Suites with fixed candidates check only
/// those, up to `budget` of them. Throws UnknownSuite.
std::optional<P0Set> search_counterexample(std::string_view suite, int bound, std::int64_t budget,
                                           std::uint64_t seed);

}  // namespace stonework
