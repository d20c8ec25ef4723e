#include <doctest.h>

#include "fixtures.hpp"
#include "stonework/lab.hpp"
#include "stonework/spectrum.hpp"
#include "stonework/tight.hpp"

using namespace stonework;

namespace {

bool centred_literal(const P0Set& b, Mask c) {
  for (Mask f = c;; f = (f - 1) & c) {
    if ((lower_bounds(b, f) & b.nonzero()) == 0) return false;
    if (f == 0) break;
  }
  return true;
}

std::vector<Mask> maximal_centred_literal(const P0Set& b) {
  std::vector<Mask> centred, out;
  for (Mask c = 0; c <= b.all(); ++c)
    if (centred_literal(b, c)) centred.push_back(c);
  for (Mask c : centred) {
    bool maximal = true;
    for (Mask d : centred) maximal = maximal && (d == c || !subset_of(c, d));
    if (maximal && c) out.push_back(c);
  }
  return out;
}

bool partial_order(const P0Set& b) { return b.reflexive_view().is_antisymmetric(); }

}  // namespace

TEST_CASE("character examples") {
  CHECK(tight_characters(fx::e0()).chars == std::vector<Mask>{0b010, 0b100});
  CHECK(tight_characters(fx::c2()).chars == std::vector<Mask>{0b110});
  CHECK(tight_characters(fx::powerset(2)).size() == 2);
  CHECK(tight_characters(fx::one_point()).size() == 0);
  CHECK(maximal_centred_sets(fx::e0()) == std::vector<Mask>{0b010, 0b100});
  CHECK(maximal_centred_sets(fx::c2()) == std::vector<Mask>{0b110});
  CHECK(two_element_algebra().size() == 2);
}

TEST_CASE("characters agree with the literal oracle and the centred sets") {
  auto check = [](const P0Set& b) {
    if (!partial_order(b)) return true;
    const auto fast = tight_characters(b).chars;
    REQUIRE(fast == tight_characters_literal(b).chars);
    REQUIRE(fast == tightish_characters_literal(b).chars);
    REQUIRE(fast == maximal_centred_sets(b));
    REQUIRE(fast == maximal_centred_literal(b));
    return true;
  };
  for (int n = 1; n <= 4; ++n) enumerate_structures(n, false, check);
  enumerate_structures(5, true, check);
}

TEST_CASE("pseudobasis conditions") {
  const FiniteTopology two = discrete_topology(2);
  const PseudobasisReport ok = is_pseudobasis(two, {0, 0b01, 0b10});
  CHECK(ok.passed());
  CHECK(ok.clopen == std::vector<bool>{true, true, true});
  CHECK(ok.compact == std::vector<bool>{true, true, true});

  const PseudobasisReport coarse = is_pseudobasis(two, {0, 0b11});
  CHECK_FALSE(coarse.report.holds("t0"));
  CHECK(coarse.report.find("t0")->witness == std::vector<int>{0, 1});

  CHECK_FALSE(is_pseudobasis(two, {0b01, 0b10}).report.holds("minimum"));
  const FiniteTopology sierpinski = generated_topology(2, {0b10, 0b11});
  CHECK_THROWS_AS(is_pseudobasis(sierpinski, {0, 0b01}), Error);
}

TEST_CASE("spectrum spaces") {
  const SpectrumSpace e0 = spectrum_space(fx::e0());
  CHECK(e0.top.points == 2);
  CHECK(e0.top.basis[1] == 0b01);
  CHECK(e0.top.basis[2] == 0b10);
  CHECK(e0.report.passed());
  const SpectrumSpace c2 = spectrum_space(fx::c2());
  CHECK(c2.top.points == 1);
  CHECK(c2.top.basis[1] == c2.top.basis[2]);
  CHECK(spectrum_space(fx::one_point()).top.points == 0);
}

TEST_CASE("homeomorphisms from clopen pseudobases") {
  const FiniteTopology two = discrete_topology(2);
  const Homeomorphism h = spectrum_homeomorphism(two, {0, 0b01, 0b10});
  CHECK(h.report.passed());
  CHECK(h.structure == fx::e0());
  CHECK(h.phi == std::vector<Mask>{0b010, 0b100});

  CHECK(spectrum_homeomorphism(two, {0, 1, 2, 3}).report.passed());
  const Homeomorphism one = spectrum_homeomorphism(discrete_topology(1), {0, 1});
  CHECK(one.phi.size() == 1);
  CHECK(one.report.passed());

  CHECK_THROWS_AS(spectrum_homeomorphism(two, {0, 0b11}), Error);
  // {1} is open but its complement is not.
  const FiniteTopology sierpinski = generated_topology(2, {0b10, 0b11});
  try {
    spectrum_homeomorphism(sierpinski, {0, 0b10, 0b11});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK((e.code() == ErrorCode::NotClopen || e.code() == ErrorCode::NotPseudobasis));
  }
}

TEST_CASE("pseudobasis characterization") {
  const Report e0 = verify_pseudochar(fx::e0());
  CHECK(e0.passed());
  CHECK(e0.holds("order_isomorphism"));
  const Report c2 = verify_pseudochar(fx::c2());
  CHECK(c2.passed());
  CHECK_FALSE(c2.holds("separative"));
  CHECK_FALSE(c2.holds("injective"));
  CHECK(verify_pseudochar(fx::powerset(2)).passed());

  for (int n = 1; n <= 5; ++n)
    enumerate_structures(n, true, [](const P0Set& b) {
      const Report r = verify_pseudochar(b);
      REQUIRE(r.passed());
      REQUIRE(r.holds("separative") == r.holds("order_isomorphism"));
      return true;
    });
}

TEST_CASE("separativity chain") {
  for (const P0Set& b : {fx::e0(), fx::powerset(2)}) {
    const Report r = separativity_chain(b);
    CHECK(r.holds("separative"));
    CHECK(r.holds("rho_injective"));
    CHECK(r.holds("ssc"));
    CHECK(r.passed());
  }
  const Report c2 = separativity_chain(fx::c2());
  CHECK_FALSE(c2.holds("separative"));
  CHECK_FALSE(c2.holds("rho_injective"));
  CHECK_FALSE(c2.holds("ssc"));
  CHECK(c2.holds("chain_respected"));
  CHECK(c2.holds("semilattice_equivalence"));

  for (int n = 1; n <= 4; ++n)
    enumerate_structures(n, false, [](const P0Set& b) {
      REQUIRE(separativity_chain(b).passed());
      return true;
    });
}

TEST_CASE("characters of the structure and of its enveloping algebra") {
  for (const P0Set& b : {fx::e0(), fx::c2(), fx::w5(), fx::powerset(2)}) CHECK(spectrum_vs_stone(b).passed());
  for (int n = 1; n <= 4; ++n)
    enumerate_structures(n, false, [](const P0Set& b) {
      const Report r = spectrum_vs_stone(b);
      REQUIRE(r.passed());
      if (partial_order(b))
        REQUIRE(tight_characters(b).size() == tight_characters(enveloping_algebra(b).as_structure()).size());
      return true;
    });
}
