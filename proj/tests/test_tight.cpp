#include <doctest.h>

#include <functional>

#include "fixtures.hpp"
#include "stonework/kernels.hpp"
#include "stonework/lab.hpp"
#include "stonework/tight.hpp"

using namespace stonework;

namespace {

// Common ⪯-lower bounds, by definition.
Mask lower_bounds_literal(const P0Set& b, Mask c) {
  Mask out = 0;
  for (int z = 0; z < b.size(); ++z) {
    bool ok = true;
    for_each_bit(c, [&](int x) { ok = ok && fx::preceq_literal(b, z, x); });
    if (ok) out |= bit(z);
  }
  return out;
}

// Some nonzero z lies ⪯-below both.
bool meets_preceq(const P0Set& b, int x, int y) {
  for (int z = 0; z < b.size(); ++z)
    if (z != b.zero() && fx::preceq_literal(b, z, x) && fx::preceq_literal(b, z, y)) return true;
  return false;
}

bool covers_literal(const P0Set& b, Mask c, Mask d) {
  const Mask lb = lower_bounds_literal(b, c);
  for (int z = 0; z < b.size(); ++z) {
    if (!has(lb, z) || z == b.zero()) continue;
    bool hit = false;
    for_each_bit(d, [&](int y) { hit = hit || meets_preceq(b, z, y); });
    if (!hit) return false;
  }
  return true;
}

// {tightish, tight} of a map, over every pair of source subsets.
std::pair<bool, bool> tightness_literal(const StructMap& m) {
  bool tightish = true, tight = true;
  const P0Set& s = m.source;
  for (Mask f = 0; f <= s.all(); ++f)
    for (Mask g = 0; g <= s.all(); ++g) {
      if (!covers_literal(s, f, g)) continue;
      Mask bf = 0, bg = 0;
      for_each_bit(f, [&](int x) { bf |= bit(m(x)); });
      for_each_bit(g, [&](int x) { bg |= bit(m(x)); });
      if (covers_literal(m.target, bf, bg)) continue;
      tight = false;
      if (f) tightish = false;
    }
  return {tightish, tight};
}

bool coinitial_literal(const StructMap& m) {
  const P0Set& t = m.target;
  for (int a = 0; a < t.size(); ++a) {
    if (a == t.zero()) continue;
    bool found = false;
    for (int x = 0; x < m.source.size(); ++x)
      found = found || (m(x) != t.zero() && fx::preceq_literal(t, m(x), a));
    if (!found) return false;
  }
  return true;
}

// Calls f on every zero-preserving assignment source → target.
void all_maps(const P0Set& s, const P0Set& t, const std::function<void(const StructMap&)>& f) {
  std::vector<int> a(s.size(), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == s.size()) {
      f(make_map(s, t, a));
      return;
    }
    if (i == s.zero()) {
      a[i] = t.zero();
      rec(i + 1);
      return;
    }
    for (int v = 0; v < t.size(); ++v) {
      a[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

TEST_CASE("lower bounds and covers match their definitions") {
  for (int n = 1; n <= 4; ++n)
    enumerate_structures(n, false, [](const P0Set& b) {
      for (Mask c = 0; c <= b.all(); ++c) {
        REQUIRE(lower_bounds(b, c) == lower_bounds_literal(b, c));
        for (Mask d = 0; d <= b.all(); ++d) REQUIRE(covers(b, c, d) == covers_literal(b, c, d));
      }
      return true;
    });
}

TEST_CASE("cover examples") {
  const P0Set e0 = fx::e0();
  CHECK(lower_bounds(e0, 0b110) == 0b001);
  CHECK(lower_bounds(e0, 0) == e0.all());
  CHECK(lower_bounds(fx::c2(), 0b100) == 0b111);
  CHECK(covers(e0, 0, 0b110));
  CHECK_FALSE(covers(e0, 0b010, 0b100));
  for (Mask c = 1; c <= e0.all(); ++c) CHECK(covers(e0, c, c));
}

TEST_CASE("map classification examples") {
  const P0Set e0 = fx::e0();
  const Report p3 = map_properties(make_map(e0, fx::powerset(3), {0, 1, 2}));
  CHECK(p3.holds("tightish"));
  CHECK_FALSE(p3.holds("tight"));
  const Report p2 = map_properties(make_map(e0, fx::powerset(2), {0, 1, 2}));
  CHECK(p2.holds("tight"));
  const Report id = map_properties(make_map(fx::powerset(2), fx::powerset(2), {0, 1, 2, 3}));
  CHECK(id.holds("tight"));
  CHECK(id.holds("coinitial"));
  CHECK(id.holds("representation"));
  CHECK(map_properties(make_map(fx::c2(), fx::powerset(1), {0, 1, 1})).holds("character"));

  CHECK_THROWS_AS(map_properties(make_map(e0, fx::powerset(2), {1, 1, 2})), Error);
  CHECK_THROWS_AS(make_map(e0, fx::powerset(2), {0, 1}), Error);
  CHECK_THROWS_AS(make_map(e0, fx::powerset(2), {0, 1, 9}), Error);
}

TEST_CASE("map classification matches literal evaluation") {
  std::vector<P0Set> small;
  for (int n = 1; n <= 3; ++n)
    enumerate_structures(n, false, [&](const P0Set& b) {
      small.push_back(b);
      return true;
    });
  for (const P0Set& s : small)
    for (const P0Set& t : small)
      all_maps(s, t, [](const StructMap& m) {
        const Report r = map_properties(m);
        const auto [tightish, tight] = tightness_literal(m);
        REQUIRE(r.holds("tightish") == tightish);
        REQUIRE(r.holds("tight") == tight);
        REQUIRE(r.holds("coinitial") == coinitial_literal(m));
        if (tightish && r.holds("coinitial")) REQUIRE(tight);
        if (tight) REQUIRE(tightish);
      });
}

TEST_CASE("tight equivalences") {
  const P0Set e0 = fx::e0(), p2 = fx::powerset(2);
  const Report a = verify_tight_equivalences(make_map(e0, p2, {0, 1, 2}));
  CHECK(a.passed());
  CHECK(a.holds("cover_premise"));
  CHECK(a.holds("tightish_with_cover_is_tight"));

  const Report id = verify_tight_equivalences(make_map(p2, p2, {0, 1, 2, 3}));
  CHECK(id.passed());
  CHECK(id.holds("gba_homomorphism_equivalence"));
  CHECK(id.holds("gba_hom"));
  const Report swap = verify_tight_equivalences(make_map(p2, p2, {0, 2, 1, 3}));
  CHECK(swap.holds("gba_homomorphism_equivalence"));
  CHECK(swap.holds("gba_hom"));
  CHECK(verify_tight_equivalences(make_map(p2, fx::powerset(3), {0, 1, 2, 3})).passed());
}

TEST_CASE("Alexandroff operations") {
  const P0Set c2 = fx::c2(), e0 = fx::e0();
  CHECK(regularize(c2, 0b010) == 0b110);
  const AlexandroffOps ops = alexandroff_ops(c2, 0b010);
  CHECK(ops.closure == 0b110);
  CHECK(ops.regularize == 0b110);
  CHECK(regularize(e0, 0b010) == 0b010);
  CHECK(regularize(c2, 0) == 0);
  CHECK(rho(c2, 1) == 0b110);
  CHECK(rho(c2, 2) == 0b110);
  CHECK(rho(e0, 1) == 0b010);
  CHECK(rho(e0, 0) == 0);
}

TEST_CASE("enveloping algebras") {
  const RegularOpenAlgebra e0 = enveloping_algebra(fx::e0());
  CHECK(e0.elements == std::vector<Mask>{0, 0b010, 0b100, 0b110});
  CHECK(e0.as_structure() == fx::powerset(2));
  const RegularOpenAlgebra c2 = enveloping_algebra(fx::c2());
  CHECK(c2.elements == std::vector<Mask>{0, 0b110});
  const RegularOpenAlgebra p2 = enveloping_algebra(fx::powerset(2));
  CHECK(p2.size() == 4);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      CHECK(fx::powerset(2).preceq(x, y) == subset_of(p2.elements[p2.rho[x]], p2.elements[p2.rho[y]]));

  for (int n = 1; n <= 4; ++n)
    enumerate_structures(n, false, [](const P0Set& b) {
      const RegularOpenAlgebra s = enveloping_algebra(b);
      for (Mask e : s.elements) REQUIRE(regularize(b, e) == e);
      const Report gba = order_predicates(s.as_structure());
      REQUIRE(gba.holds("generalized_boolean"));
      return true;
    });
}

TEST_CASE("covers are inclusions of meets in joins of rho") {
  CHECK(verify_fgrho(fx::e0()).passed());
  CHECK(verify_fgrho(fx::c2()).passed());
  CHECK(verify_fgrho(fx::w5()).passed());
  for (int n = 1; n <= 4; ++n)
    enumerate_structures(n, false, [](const P0Set& b) {
      REQUIRE(verify_fgrho(b).passed());
      return true;
    });
}

TEST_CASE("Alexandroff maps are tight and coinitial") {
  for (int n = 1; n <= 5; ++n)
    enumerate_structures(n, true, [](const P0Set& b) {
      REQUIRE(verify_alexandroff_maps(b).passed());
      return true;
    });
}

TEST_CASE("factoring examples") {
  const P0Set e0 = fx::e0();
  const TightFactor f = factor_tight(make_map(e0, fx::powerset(2), {0, 1, 2}));
  CHECK(f.report.passed());
  CHECK(f.pi.assignment == std::vector<int>{0, 1, 2, 3});

  const RegularOpenAlgebra s = enveloping_algebra(e0);
  const TightFactor self = factor_tight(make_map(e0, s.as_structure(), s.rho));
  for (int i = 0; i < s.size(); ++i) CHECK(self.pi(i) == i);

  const TightFactor c2 = factor_tight(make_map(fx::c2(), fx::powerset(1), {0, 1, 1}));
  CHECK(c2.pi.assignment == std::vector<int>{0, 1});

  CHECK_THROWS_AS(factor_tight(make_map(fx::powerset(2), fx::powerset(2), {0, 1, 1, 0})), Error);
  CHECK_THROWS_AS(factor_tight(make_map(e0, fx::d3(), {0, 1, 2})), Error);

  // 1 is not self-related, so 1 ⪯ 0 and ρ(0) = {1} is not the empty set.
  const P0Set flat = P0Set::from_pairs(2, 0, fx::Pairs{{0, 0}, {0, 1}});
  try {
    factor_tight(make_map(flat, fx::powerset(2), {0, 0}));
    FAIL("expected PreconditionFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionFailed);
    CHECK(e.witness() == std::vector<int>{1});
  }
}

TEST_CASE("every tightish map into small powersets factors uniquely") {
  const P0Set targets[] = {fx::powerset(2), fx::powerset(3)};
  for (int n = 1; n <= 3; ++n)
    enumerate_structures(n, false, [&](const P0Set& b) {
      if (b.reflexive_view().down(b.zero()) & b.nonzero()) return true;
      for (const P0Set& t : targets)
        all_maps(b, t, [](const StructMap& m) {
          if (!map_properties(m).holds("tightish")) return;
          const TightFactor f = factor_tight(m);
          REQUIRE(f.report.passed());
          for (int x = 0; x < m.source.size(); ++x) REQUIRE(f.pi(f.algebra.rho[x]) == m(x));
          REQUIRE(factor_map(m, f.algebra, ExtensionOrder::HighestFirst) == f.pi.assignment);
        });
      return true;
    });
}

TEST_CASE("naturality and functor laws") {
  const P0Set e0 = fx::e0(), p2 = fx::powerset(2);
  const StructMap beta = make_map(e0, p2, {0, 1, 2});
  CHECK(naturality_square(beta).passed());
  const Report id = naturality_square(make_map(e0, e0, {0, 1, 2}));
  CHECK(id.holds("identity_law"));
  const StructMap ide = induced_algebra_map(make_map(e0, e0, {0, 1, 2}));
  for (int i = 0; i < ide.source.size(); ++i) CHECK(ide(i) == i);

  for (const std::vector<int>& perm : {std::vector<int>{0, 1, 2, 3}, std::vector<int>{0, 2, 1, 3}}) {
    const StructMap beta2 = make_map(p2, p2, perm);
    CHECK(functor_law(beta, beta2).passed());
    CHECK(compose_maps(beta, beta2).assignment == std::vector<int>{0, perm[1], perm[2]});
  }
  CHECK_THROWS_AS(functor_law(beta, make_map(e0, e0, {0, 1, 2})), Error);
}

TEST_CASE("scalar and AVX2 paths give identical verdicts") {
  auto collect = [] {
    std::vector<std::string> out;
    for (int n = 1; n <= 4; ++n)
      enumerate_structures(n, false, [&](const P0Set& b) {
        out.push_back(to_text(verify_fgrho(b)));
        out.push_back(to_text(map_properties(make_map(b, b, [&] {
          std::vector<int> a(b.size());
          for (int i = 0; i < b.size(); ++i) a[i] = i;
          return a;
        }()))));
        return true;
      });
    return out;
  };
  const kernels::Isa before = kernels::active_isa();
  kernels::force_isa(kernels::Isa::Scalar);
  const auto scalar = collect();
  kernels::force_isa(kernels::Isa::Avx2);
  const auto vector = collect();
  kernels::force_isa(before);
  CHECK(scalar == vector);
}
