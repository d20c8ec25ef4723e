#include <doctest.h>

#include "fixtures.hpp"
#include "stonework/axioms.hpp"
#include "stonework/lab.hpp"
#include "stonework/saturation.hpp"

using namespace stonework;

namespace {

// C^≻ ⊆ D^⋒ ∪ {0}, straight from the elements.
bool precsim_literal(const P0Set& b, Mask c, Mask d) {
  for (int x = 0; x < b.size(); ++x) {
    bool below = false;
    for_each_bit(c, [&](int e) { below = below || b.prec(x, e); });
    if (!below || x == b.zero()) continue;
    bool meets = false;
    for_each_bit(d, [&](int e) { meets = meets || fx::meets_literal(b, x, e); });
    if (!meets) return false;
  }
  return true;
}

bool prec_literal(const P0Set& b, Mask c, Mask d) {
  bool ok = true;
  for_each_bit(c, [&](int x) {
    bool found = false;
    for_each_bit(d, [&](int y) { found = found || b.prec(x, y); });
    ok = ok && found;
  });
  return ok;
}

bool wayb_literal(const P0Set& b, Mask c, Mask d) {
  for (Mask f = 0; f <= b.all(); ++f)
    if (precsim_literal(b, c, f) && prec_literal(b, f, d)) return true;
  return false;
}

Mask saturate_literal(const P0Set& b, Mask a) {
  Mask out = 0;
  for (int y = 0; y < b.size(); ++y)
    if (wayb_literal(b, bit(y), a)) out |= bit(y);
  return out;
}

}  // namespace

TEST_CASE("subset relations match literal evaluation") {
  for (int n = 1; n <= 4; ++n)
    enumerate_structures(n, false, [](const P0Set& b) {
      for (Mask c = 0; c <= b.all(); ++c)
        for (Mask d = 0; d <= b.all(); ++d) {
          const SubsetRelations fast = subset_relations(b, c, d);
          REQUIRE(fast == subset_relations_exhaustive(b, c, d));
          REQUIRE(fast.prec == prec_literal(b, c, d));
          REQUIRE(fast.precsim == precsim_literal(b, c, d));
        }
      return true;
    });
  // The literal ⪻ is quadratic in subsets, so it runs on size ≤ 3 only.
  for (int n = 1; n <= 3; ++n)
    enumerate_structures(n, false, [](const P0Set& b) {
      for (Mask c = 0; c <= b.all(); ++c) {
        REQUIRE(saturate(b, c) == saturate_literal(b, c));
        for (Mask d = 0; d <= b.all(); ++d) REQUIRE(subset_relations(b, c, d).wayb == wayb_literal(b, c, d));
      }
      return true;
    });
}

TEST_CASE("subset relation examples") {
  const P0Set p2 = fx::powerset(2);
  const SubsetRelations r = subset_relations(p2, 0b0110, 0b1000);
  CHECK(r.prec);
  CHECK(r.wayb);
  const P0Set e0 = fx::e0();
  for (Mask c = 0; c <= e0.all(); ++c) CHECK(subset_relations(e0, c, c).precsim);
  CHECK_FALSE(subset_relations(e0, 0b010, 0b100).precsim);
}

TEST_CASE("saturation examples") {
  const P0Set p2 = fx::powerset(2);
  CHECK(saturate(p2, 0b0110) == 0b1111);
  CHECK(saturate(p2, 0) == 0b0001);
  const P0Set e0 = fx::e0();
  for (Mask a = 0; a <= e0.all(); ++a) CHECK(saturate(e0, saturate(e0, a)) == saturate(e0, a));
}

TEST_CASE("saturated families") {
  const SaturatedFamily p2 = saturated_family(fx::powerset(2), Generators::All);
  CHECK(p2.sets == std::vector<Mask>{0b0001, 0b0011, 0b0101, 0b1111});
  const SaturatedFamily e0 = saturated_family(fx::e0(), Generators::All);
  CHECK(e0.size() == 4);
  CHECK(saturated_family(fx::one_point(), Generators::All).sets == std::vector<Mask>{1});
  for (int n = 1; n <= 4; ++n)
    enumerate_structures(n, false, [](const P0Set& b) {
      const SaturatedFamily all = saturated_family(b, Generators::All);
      REQUIRE(all.sets == saturated_family(b, Generators::Finite).sets);
      for (Mask s : all.sets) REQUIRE(saturate(b, s) == s);
      return true;
    });
}

TEST_CASE("frames") {
  CHECK(verify_frame(fx::e0()).passed());
  CHECK(verify_frame(fx::powerset(2)).passed());
  const P0Set w = fx::w5();
  if (check_basic_semilattice(w).passed())
    CHECK(verify_frame(w).passed());
  else
    CHECK_THROWS_AS(verify_frame(w), Error);
  CHECK_THROWS_AS(verify_frame(fx::c2()), Error);
}

TEST_CASE("frame checks on every basic semilattice") {
  for (int n = 1; n <= 4; ++n)
    enumerate_structures(n, false, [](const P0Set& b) {
      if (check_basic_semilattice(b).passed()) REQUIRE(verify_frame(b).passed());
      return true;
    });
}

TEST_CASE("subset laws hold exhaustively on small structures") {
  for (int n = 1; n <= 3; ++n)
    enumerate_structures(n, false, [](const P0Set& b) {
      REQUIRE(precprops_laws(b).passed());
      REQUIRE(wayb_laws(b).passed());
      REQUIRE(saturation_laws(b).passed());
      return true;
    });
}

TEST_CASE("caps") {
  const P0Set big = P0Set::from_rows(0, std::vector<Mask>(13, full_mask(13)));
  CHECK_THROWS_AS(SubsetCalculus{big}, Error);
}
