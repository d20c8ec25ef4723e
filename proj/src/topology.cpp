#include "stonework/topology.hpp"

#include <algorithm>
#include <unordered_set>

#include "stonework/error.hpp"

namespace stonework {

bool FiniteTopology::is_open(Mask s) const {
  return std::binary_search(opens.begin(), opens.end(), s);
}

Mask FiniteTopology::closure(Mask s) const {
  Mask outside = 0;
  for (Mask o : opens)
    if (!(o & s)) outside |= o;
  return all() & ~outside;
}

Mask FiniteTopology::interior(Mask s) const {
  Mask in = 0;
  for (Mask o : opens)
    if (subset_of(o, s)) in |= o;
  return in;
}

FiniteTopology generated_topology(int points, std::vector<Mask> basis, std::vector<int> basis_source,
                                  int max_opens) {
  require_cap(points, kMaxElements, "topology");
  FiniteTopology t;
  t.points = points;
  std::unordered_set<Mask> seen{0};
  std::vector<Mask> opens{0};
  for (Mask b : basis) {
    if (b & ~t.all()) fail(ErrorCode::IndexOutOfRange, "basis member outside the point set");
    const std::size_t count = opens.size();
    for (std::size_t i = 0; i < count; ++i) {
      Mask u = opens[i] | b;
      if (seen.insert(u).second) {
        opens.push_back(u);
        if (static_cast<int>(opens.size()) > max_opens)
          fail(ErrorCode::CapExceeded, "too many open sets to materialize");
      }
    }
  }
  std::sort(opens.begin(), opens.end());
  t.opens = std::move(opens);
  if (basis_source.empty()) basis_source.assign(basis.size(), -1);
  t.basis = std::move(basis);
  t.basis_source = std::move(basis_source);
  return t;
}

FiniteTopology discrete_topology(int points, int max_opens) {
  std::vector<Mask> singles;
  for (int p = 0; p < points; ++p) singles.push_back(bit(p));
  return generated_topology(points, std::move(singles), {}, max_opens);
}

void validate_topology(const FiniteTopology& t) {
  if (t.points < 0 || t.points > kMaxElements) fail(ErrorCode::Format, "bad point count");
  if (!std::is_sorted(t.opens.begin(), t.opens.end()) ||
      std::adjacent_find(t.opens.begin(), t.opens.end()) != t.opens.end())
    fail(ErrorCode::Format, "opens must be distinct and sorted");
  for (Mask o : t.opens)
    if (o & ~t.all()) fail(ErrorCode::IndexOutOfRange, "open set outside the point set");
  if (!t.is_open(0)) fail(ErrorCode::Format, "the empty set is not open");
  Mask cover = 0;
  for (Mask b : t.basis) {
    if (!t.is_open(b)) fail(ErrorCode::Format, "basis member is not open");
    cover |= b;
  }
  if (!t.is_open(cover)) fail(ErrorCode::Format, "union of the basis is not open");
  for (Mask a : t.opens) {
    for (Mask b : t.opens)
      if (!t.is_open(a | b) || !t.is_open(a & b))
        fail(ErrorCode::Format, "opens are not closed under union and intersection");
    Mask u = 0;
    for (Mask b : t.basis)
      if (subset_of(b, a)) u |= b;
    if (u != a) fail(ErrorCode::Format, "an open set is not a union of basis members");
  }
}

// Opens are closed under finite ∩, so each point has a least open
// neighbourhood and two points separate iff those are disjoint.
bool is_hausdorff(const FiniteTopology& t, int* p, int* q) {
  std::vector<Mask> nbhd(t.points, t.all());
  for (Mask o : t.opens)
    for_each_bit(o, [&](int a) { nbhd[a] &= o; });
  for (int a = 0; a < t.points; ++a)
    for (int b = a + 1; b < t.points; ++b)
      if (nbhd[a] & nbhd[b]) {
        if (p) *p = a;
        if (q) *q = b;
        return false;
      }
  return true;
}

}  // namespace stonework
