#include <doctest.h>

#include "fixtures.hpp"
#include "stonework/morphisms.hpp"

using namespace stonework;

namespace {

Interpolator relation(const P0Set& a, const P0Set& b, std::uint32_t bits) {
  Interpolator r{a, b, std::vector<Mask>(a.size(), 0)};
  for (int x = 0; x < a.size(); ++x) r.rel[x] = (bits >> (x * b.size())) & full_mask(b.size());
  return r;
}

std::vector<Mask> compose_literal(const Interpolator& r, const Interpolator& s) {
  std::vector<Mask> out(r.source.size(), 0);
  for (int x = 0; x < r.source.size(); ++x)
    for (int y = 0; y < r.target.size(); ++y)
      for (int z = 0; z < s.target.size(); ++z)
        if (r.related(x, y) && s.related(y, z)) out[x] |= bit(z);
  return out;
}

// Every relation P2 → P2 that is an interpolator relating only 0 to 0.
const std::vector<Interpolator>& p2_interpolators() {
  static const std::vector<Interpolator> all = [] {
    const P0Set p2 = fx::powerset(2);
    std::vector<Interpolator> out;
    for (std::uint32_t bits = 0; bits < (1u << 16); ++bits) {
      Interpolator r = relation(p2, p2, bits);
      const Report rep = is_interpolator(r);
      if (rep.passed() && rep.holds("zero_reflecting")) out.push_back(std::move(r));
    }
    return out;
  }();
  return all;
}

}  // namespace

TEST_CASE("interpolator examples") {
  const P0Set p2 = fx::powerset(2);
  CHECK(is_interpolator(identity_interpolator(p2)).passed());
  const Report empty = is_interpolator(relation(p2, p2, 0));
  CHECK_FALSE(empty.holds("Cofinality"));
  CHECK_THROWS_AS(is_interpolator(identity_interpolator(fx::e0())), Error);

  const FiniteTopology x = discrete_topology(2);
  const Interpolator id = interpolator_from_map({0, 1}, x, {0, 1, 2, 3}, x, {0, 1, 2, 3});
  for (int a = 0; a < 4; ++a) CHECK(id.rel[a] == p2.succ(a));
  CHECK(is_interpolator(id).passed());
}

TEST_CASE("composition") {
  const P0Set p2 = fx::powerset(2);
  const Interpolator prec = identity_interpolator(p2);
  CHECK(compose_interpolators(prec, prec).rel == prec.rel);
  const Interpolator empty = relation(p2, p2, 0);
  CHECK(compose_interpolators(empty, prec).rel == empty.rel);
  const Interpolator to_e0{p2, fx::e0(), std::vector<Mask>(4, 0)};
  CHECK_THROWS_AS(compose_interpolators(to_e0, prec), Error);
}

TEST_CASE("category laws over every interpolator on P2") {
  const auto& all = p2_interpolators();
  REQUIRE(!all.empty());
  const Interpolator prec = identity_interpolator(fx::powerset(2));
  for (const Interpolator& r : all) {
    REQUIRE(compose_interpolators(r, prec).rel == r.rel);
    REQUIRE(compose_interpolators(prec, r).rel == r.rel);
    const StoneMap m = induced_stone_map(r);
    REQUIRE(m.report.passed());
  }
  for (const Interpolator& r : all)
    for (const Interpolator& s : all) {
      const Interpolator rs = compose_interpolators(r, s);
      REQUIRE(rs.rel == compose_literal(r, s));
      REQUIRE(is_interpolator(rs).passed());
      // Ultrafilter U goes to (U^R)^S.
      const StoneMap mr = induced_stone_map(r), ms = induced_stone_map(s), mrs = induced_stone_map(rs);
      for (std::size_t p = 0; p < mr.image.size(); ++p) REQUIRE(mrs.image[p] == ms.image[mr.image[p]]);
      for (const Interpolator& t : all)
        REQUIRE(compose_interpolators(rs, t).rel == compose_interpolators(r, compose_interpolators(s, t)).rel);
    }
}

TEST_CASE("an interpolator relating an atom to 0 has no induced map") {
  // 0 and {1} go everywhere, {2} and the top go to {1} and the top. Every
  // listed axiom holds, but the ultrafilter at {1} is sent to all of P2.
  const P0Set p2 = fx::powerset(2);
  const Interpolator r{p2, p2, {0b1111, 0b1111, 0b1010, 0b1010}};
  const Report rep = is_interpolator(r);
  CHECK(rep.passed());
  CHECK_FALSE(rep.holds("zero_reflecting"));
  try {
    induced_stone_map(r);
    FAIL("expected NotUltrafilter");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUltrafilter);
  }
}

TEST_CASE("induced stone maps") {
  const P0Set p2 = fx::powerset(2);
  const StoneMap id = induced_stone_map(identity_interpolator(p2));
  CHECK(id.image == std::vector<int>{0, 1});

  const FiniteTopology two = discrete_topology(2), one = discrete_topology(1);
  const Interpolator c = interpolator_from_map({0, 0}, two, {0, 1, 2, 3}, one, {0, 1});
  for (int a = 0; a < 4; ++a) CHECK(c.related(a, 1));
  const StoneMap cm = induced_stone_map(c);
  CHECK(cm.image == std::vector<int>{0, 0});
  CHECK(map_round_trip({0, 0}, two, {0, 1, 2, 3}, one, {0, 1}).passed());
  CHECK(map_round_trip({1, 0}, two, {0, 1, 2, 3}, two, {0, 1, 2, 3}).passed());

  const Interpolator empty = relation(p2, p2, 0);
  CHECK_THROWS_AS(induced_stone_map(empty), Error);
}

TEST_CASE("continuity is checked") {
  const FiniteTopology sierpinski = generated_topology(2, {0b10, 0b11});
  const FiniteTopology two = discrete_topology(2);
  try {
    interpolator_from_map({0, 1}, sierpinski, {0, 0b10, 0b11}, two, {0, 1, 2, 3});
    FAIL("expected NotContinuous");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotContinuous);
  }
  CHECK(preimage({1, 0, 1}, 0b10) == 0b101);
  CHECK(image_of({1, 0, 1}, 0b101) == 0b10);
}
