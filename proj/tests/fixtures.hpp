#pragma once
// Small named structures built directly from pair lists, plus brute-force
// helpers shared by the test files.

#include <functional>
#include <utility>
#include <vector>

#include "stonework/core.hpp"

namespace fx {

using stonework::Mask;
using stonework::P0Set;
using Pairs = std::vector<std::pair<int, int>>;

// 0 below two self-related atoms x (1) and y (2).
inline P0Set e0() { return P0Set::from_pairs(3, 0, Pairs{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 2}}, {"0", "x", "y"}); }

// Reflexive chain 0 < a (1) < b (2).
inline P0Set c2() {
  return P0Set::from_pairs(3, 0, Pairs{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}, {"0", "a", "b"});
}

// Subsets of {1..n} indexed by their bitmask, ordered by inclusion.
inline P0Set powerset(int n) {
  Pairs p;
  for (int i = 0; i < (1 << n); ++i)
    for (int j = 0; j < (1 << n); ++j)
      if ((i & ~j) == 0) p.emplace_back(i, j);
  return P0Set::from_pairs(1 << n, 0, p);
}

// 0, atoms a b c (1..3), top 1 (4).
inline P0Set d3() {
  Pairs p;
  for (int i = 0; i < 5; ++i) p.emplace_back(0, i), p.emplace_back(i, 4), p.emplace_back(i, i);
  return P0Set::from_pairs(5, 0, p);
}

// 0, p (1), q (2), x (3), y (4): p, q ≺ x ≺ y, p ≺ p, q ≺ q.
inline P0Set w5() {
  Pairs p{{1, 1}, {2, 2}, {1, 3}, {2, 3}, {3, 4}, {1, 4}, {2, 4}};
  for (int i = 0; i < 5; ++i) p.emplace_back(0, i);
  return P0Set::from_pairs(5, 0, p);
}

inline P0Set one_point() { return P0Set::from_pairs(1, 0, Pairs{{0, 0}}); }

// Every relation on n points with 0 related to everything, filtered by a
// triple-loop transitivity test. Partial orders only when reflexive_only.
inline void naive_structures(int n, bool reflexive_only, const std::function<void(const P0Set&)>& visit) {
  std::vector<std::pair<int, int>> free;
  for (int x = 1; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!(reflexive_only && x == y)) free.emplace_back(x, y);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << free.size()); ++m) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (int y = 0; y < n; ++y) r[0][y] = true;
    if (reflexive_only)
      for (int x = 0; x < n; ++x) r[x][x] = true;
    for (std::size_t k = 0; k < free.size(); ++k)
      if ((m >> k) & 1) r[free[k].first][free[k].second] = true;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n && ok; ++c)
          if (r[a][b] && r[b][c] && !r[a][c]) ok = false;
    if (reflexive_only)
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b)
          if (a != b && r[a][b] && r[b][a]) ok = false;
    if (!ok) continue;
    Pairs p;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (r[a][b]) p.emplace_back(a, b);
    visit(P0Set::from_pairs(n, 0, p));
  }
}

// Literal ⪯: every z ≺ x has z ≺ y.
inline bool preceq_literal(const P0Set& b, int x, int y) {
  for (int z = 0; z < b.size(); ++z)
    if (b.prec(z, x) && !b.prec(z, y)) return false;
  return true;
}

inline bool meets_literal(const P0Set& b, int x, int y) {
  for (int z = 0; z < b.size(); ++z)
    if (z != b.zero() && b.prec(z, x) && b.prec(z, y)) return true;
  return false;
}

}  // namespace fx
