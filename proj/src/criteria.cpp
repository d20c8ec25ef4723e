#include "stonework/criteria.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "stonework/axioms.hpp"
#include "stonework/lab.hpp"
#include "stonework/saturation.hpp"
#include "stonework/spectrum.hpp"
#include "stonework/stone.hpp"
#include "stonework/tight.hpp"

namespace stonework {

namespace {

std::string describe(const P0Set& b) {
  std::ostringstream s;
  s << "size " << b.size() << " prec {";
  bool first = true;
  for (const auto& [x, y] : b.pairs()) {
    if (x == b.zero()) continue;
    s << (first ? "" : " ") << x << "<" << y;
    first = false;
  }
  s << "}";
  return s.str();
}

std::string describe(const Report& r) {
  const Verdict* v = r.first_failure();
  if (!v) return r.name();
  std::string out = r.name() + "." + v->property;
  if (!v->witness.empty()) {
    out += " (";
    for (std::size_t i = 0; i < v->witness.size(); ++i) out += (i ? "," : "") + std::to_string(v->witness[i]);
    out += ")";
  }
  return out;
}

// Counts instances and keeps the first failure.
struct Tally {
  std::int64_t instances = 0;
  std::string failure;

  void check(bool ok, const std::function<std::string()>& why) {
    ++instances;
    if (!ok && failure.empty()) failure = why();
  }
  void check(const Report& r, const P0Set& b) {
    check(r.passed(), [&] { return describe(r) + " on " + describe(b); });
  }
};

bool flag(const Report& r, std::string_view name) { return r.applicable(name) && r.holds(name); }

std::vector<P0Set> structures_up_to(int n, bool orders) {
  std::vector<P0Set> out;
  for (int k = 1; k <= n; ++k) {
    std::vector<P0Set> some = all_structures(k, orders);
    out.insert(out.end(), some.begin(), some.end());
  }
  return out;
}

const std::vector<P0Set>& basic_lattices_up_to_5() {
  static const std::vector<P0Set> out = [] {
    std::vector<P0Set> v;
    for (const P0Set& b : structures_up_to(5, false))
      if (check_basic_lattice(b).passed()) v.push_back(b);
    return v;
  }();
  return out;
}

// ---- 1 ----
void example_covers(Tally& t) {
  const P0Set e0 = make_family("vee", 0);
  // Candidate pairs: subsets of the nonzero elements of size at most 2. A
  // cover is trivial when C and D share an element or C_⪰ = {0}.
  std::vector<Mask> sets;
  for (Mask m = 0; m <= e0.nonzero(); ++m)
    if ((m & ~e0.nonzero()) == 0 && popcount(m) <= 2) sets.push_back(m);
  std::vector<std::pair<Mask, Mask>> nontrivial;
  for (Mask c : sets)
    for (Mask d : sets) {
      if (c & d) continue;
      if ((lower_bounds(e0, c) & e0.nonzero()) == 0) continue;
      if (covers(e0, c, d)) nontrivial.emplace_back(c, d);
    }
  const Mask xy = 0b110;
  t.check(nontrivial.size() == 1 && nontrivial[0] == std::pair<Mask, Mask>{0, xy},
          [&] { return std::to_string(nontrivial.size()) + " nontrivial covers"; });

  const Report big = map_properties(StructMap{e0, make_family("powerset", 3), {0, 1, 2}});
  t.check(big.holds("tightish") && !big.holds("tight"), [] { return std::string("P3 map classification"); });
  const Report small = map_properties(StructMap{e0, make_family("powerset", 2), {0, 1, 2}});
  t.check(small.holds("tight"), [] { return std::string("P2 map not tight"); });
}

// ---- 2 ----
// ∩∪-closed families over discrete X containing ∅, covering X and
// separating points both ways.
bool admissible_family(const std::vector<Mask>& fam, int points) {
  Mask covered = 0;
  bool empty = false;
  for (Mask o : fam) {
    covered |= o;
    empty = empty || o == 0;
    for (Mask n : fam) {
      if (std::find(fam.begin(), fam.end(), o & n) == fam.end()) return false;
      if (std::find(fam.begin(), fam.end(), o | n) == fam.end()) return false;
    }
  }
  if (!empty || covered != full_mask(points)) return false;
  for (int p = 0; p < points; ++p)
    for (int q = 0; q < points; ++q) {
      if (p == q) continue;
      const bool sep = std::any_of(fam.begin(), fam.end(), [&](Mask o) { return has(o, p) && !has(o, q); });
      if (!sep) return false;
    }
  return true;
}

void duality_round_trip(Tally& t) {
  auto check_family = [&](int points, const std::vector<Mask>& fam) {
    const FiniteTopology x = discrete_topology(points);
    const Report r = basis_round_trip(x, fam);
    t.check(r.passed(), [&] { return describe(r) + " on a family over " + std::to_string(points) + " points"; });
  };
  for (int points = 1; points <= 3; ++points) {
    const int subsets = 1 << points;
    for (std::uint32_t sel = 0; sel < (1u << (subsets - 1)); ++sel) {
      std::vector<Mask> fam{0};
      for (int s = 1; s < subsets; ++s)
        if (has(sel, s - 1)) fam.push_back(static_cast<Mask>(s));
      if (admissible_family(fam, points)) check_family(points, fam);
    }
  }
  std::mt19937_64 rng(2024);
  int accepted = 0;
  for (int attempt = 0; accepted < 200 && attempt < 200000; ++attempt) {
    std::vector<Mask> fam{0};
    for (Mask s = 1; s < 16; ++s)
      if (rng() & 1) fam.push_back(s);
    for (bool grew = true; grew;) {
      grew = false;
      const std::vector<Mask> snapshot = fam;
      for (Mask o : snapshot)
        for (Mask n : snapshot)
          for (Mask m : {o & n, o | n})
            if (std::find(fam.begin(), fam.end(), m) == fam.end()) {
              fam.push_back(m);
              grew = true;
            }
    }
    std::sort(fam.begin(), fam.end());
    if (!admissible_family(fam, 4)) continue;
    ++accepted;
    check_family(4, fam);
  }
  t.check(accepted == 200, [&] { return "only " + std::to_string(accepted) + " random families"; });
}

// ---- 3, 4 ----
void duality_equations(Tally& t) {
  for (const P0Set& b : basic_lattices_up_to_5()) t.check(verify_duality(b), b);
}

void ultrafilter_characterizations(Tally& t) {
  for (const P0Set& b : basic_lattices_up_to_5())
    for (const Filter& f : enumerate_filters(b))
      if (f.proper && f.nonempty) t.check(ultrafilter_properties(b, f.members), b);
}

// ---- 5 ----
void reflexive_collapse(Tally& t) {
  for (const P0Set& b : structures_up_to(5, false)) {
    if (!b.is_reflexive()) continue;
    const bool basic = check_basic_lattice(b).passed();
    const bool gba = flag(order_predicates(b), "generalized_boolean");
    t.check(basic == gba, [&] { return "basic lattice " + std::to_string(basic) + " vs GBA on " + describe(b); });
  }
}

// ---- 6 ----
void alternate_axioms(Tally& t) {
  for (const P0Set& b : structures_up_to(5, false)) {
    const Report r = check_basic_lattice(b);
    if (!flag(r, "lattice") || !flag(r, "Cofinality")) continue;
    const Report alt = check_alternate_axioms(b);
    t.check(flag(alt, "equivalent"), [&] { return "alternate axioms differ on " + describe(b); });
  }
}

// ---- 7 ----
void semilattice_characterization(Tally& t) {
  const Report e0 = check_basic_semilattice(make_family("vee", 0));
  t.check(e0, make_family("vee", 0));
  const Report c2 = check_basic_semilattice(make_family("chain", 2));
  const Verdict* bad = c2.first_failure();
  t.check(bad && bad->property == "theta_1", [] { return std::string("C2 does not fail first at theta_1"); });
  for (const P0Set& b : basic_lattices_up_to_5()) t.check(check_basic_semilattice(b), b);
  for (const P0Set& b : structures_up_to(5, false))
    if (check_basic_semilattice(b).passed()) t.check(verify_frame(b), b);
}

// ---- 8 ----
void type_witness(Tally& t) {
  const P0Set w5 = make_family("witness", 0);
  t.check(phi_holds(w5, 3, 4, 1), [] { return std::string("phi_1(x,y) fails"); });
  t.check(!phi_holds(w5, 3, 4, 2), [] { return std::string("phi_2(x,y) holds"); });
}

// ---- 9 ----
void fgrho(Tally& t) {
  for (const P0Set& b : structures_up_to(5, false)) t.check(verify_fgrho(b), b);
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int n = 2 + static_cast<int>(seed % 6);
    const P0Set b = random_p0set(n, seed, seed % 2 == 0, 0.15 + 0.1 * static_cast<double>(seed % 5));
    t.check(verify_fgrho(b), b);
  }
}

// Every zero-preserving map from `from` into `to`.
template <class F>
void for_each_map(const P0Set& from, const P0Set& to, F&& visit) {
  const int n = from.size();
  std::vector<int> a(n, to.zero());
  std::function<void(int)> go = [&](int i) {
    if (i == n) {
      visit(StructMap{from, to, a});
      return;
    }
    if (i == from.zero()) {
      go(i + 1);
      return;
    }
    for (int v = 0; v < to.size(); ++v) {
      a[i] = v;
      go(i + 1);
    }
  };
  go(0);
}

// ---- 10 ----
void universality(Tally& t) {
  const P0Set targets[] = {make_family("powerset", 2), make_family("powerset", 3)};
  for (const P0Set& b : structures_up_to(4, true))
    for (const P0Set& a : targets)
      for_each_map(b, a, [&](const StructMap& beta) {
        if (!map_properties(beta).holds("tightish")) return;
        try {
          t.check(factor_tight(beta).report, b);
        } catch (const Error& e) {
          t.check(false, [&] { return std::string(e.what()) + " on " + describe(b); });
        }
      });
}

// ---- 11 ----
void naturality(Tally& t) {
  const P0Set objs[] = {make_family("vee", 0), make_family("powerset", 2), make_family("chain", 2)};
  std::vector<StructMap> tight;
  for (const P0Set& a : objs)
    for (const P0Set& b : objs)
      for_each_map(a, b, [&](const StructMap& beta) {
        if (map_properties(beta).holds("tight")) tight.push_back(beta);
      });
  for (const StructMap& beta : tight) t.check(naturality_square(beta), beta.source);
  for (const StructMap& f : tight)
    for (const StructMap& g : tight)
      if (f.target == g.source) t.check(functor_law(f, g), f.source);
}

// ---- 12 ----
void spectrum_identifications(Tally& t) {
  for (const P0Set& b : structures_up_to(6, true)) {
    const CharacterSet chars = tight_characters(b);
    const std::vector<Mask> centred = maximal_centred_sets(b);
    const Report r = spectrum_vs_stone(b);
    std::int64_t ultra = 0;
    for (Mask u : enumerate_ultrafilters(enveloping_algebra(b).as_structure())) ultra += u != 0;
    t.check(r.passed() && centred == chars.chars && ultra == chars.size(),
            [&] { return describe(r) + " on " + describe(b); });
  }
}

// ---- 13 ----
void pseudobasis_characterization(Tally& t) {
  for (const P0Set& b : structures_up_to(6, true)) {
    const Report r = verify_pseudochar(b);
    if (flag(r, "separative"))
      t.check(r.passed() && flag(r, "order_isomorphism"), [&] { return describe(r) + " on " + describe(b); });
    else
      t.check(!flag(r, "injective") || !flag(r, "order_isomorphism"),
              [&] { return "non-separative with an order isomorphism: " + describe(b); });
  }
  for (int points = 1; points <= 3; ++points) {
    const FiniteTopology x = discrete_topology(points);
    const int subsets = 1 << points;
    for (std::uint32_t sel = 0; sel < (1u << (subsets - 1)); ++sel) {
      std::vector<Mask> fam{0};
      for (int s = 1; s < subsets; ++s)
        if (has(sel, s - 1)) fam.push_back(static_cast<Mask>(s));
      if (!is_pseudobasis(x, fam).passed()) continue;
      const Homeomorphism h = spectrum_homeomorphism(x, fam);
      t.check(h.report.passed(), [&] { return describe(h.report) + " over " + std::to_string(points) + " points"; });
    }
  }
}

// ---- 14 ----
void implication_chain(Tally& t) {
  for (const P0Set& b : structures_up_to(6, true)) {
    const Report r = separativity_chain(b);
    t.check(r, b);
    if (flag(order_predicates(b), "meet_semilattice"))
      t.check(flag(r, "semilattice_equivalence"), [&] { return "semilattice equivalence on " + describe(b); });
  }
  const auto found = search_counterexample("separativity_chain", 8, 10000, 0);
  t.check(!found, [&] { return "search found " + describe(*found); });
}

// ---- 15 ----
void saturation(Tally& t) {
  auto laws = [&](const P0Set& b, const LawSweep& sweep) {
    t.check(precprops_laws(b, sweep), b);
    t.check(wayb_laws(b, sweep), b);
    t.check(saturation_laws(b, sweep), b);
  };
  for (const P0Set& b : structures_up_to(4, false)) laws(b, LawSweep{});
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const P0Set b = random_p0set(n, seed, seed % 2 == 1, 0.2 + 0.1 * static_cast<double>(seed % 4));
    laws(b, LawSweep{std::int64_t{1} << 20, 20000, seed});
  }
}

struct Entry {
  CriterionInfo info;
  void (*run)(Tally&);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = {
      {{1, "example covers and tightness", 1}, example_covers},
      {{2, "duality round trip", 60}, duality_round_trip},
      {{3, "duality equations", 120}, duality_equations},
      {{4, "ultrafilter characterizations", 60}, ultrafilter_characterizations},
      {{5, "reflexive collapse", 60}, reflexive_collapse},
      {{6, "alternate axioms", 60}, alternate_axioms},
      {{7, "semilattice characterization", 300}, semilattice_characterization},
      {{8, "type witness", 1}, type_witness},
      {{9, "cover relation through rho", 120}, fgrho},
      {{10, "universality", 300}, universality},
      {{11, "naturality and functor laws", 60}, naturality},
      {{12, "spectrum identifications", 300}, spectrum_identifications},
      {{13, "pseudobasis characterization", 300}, pseudobasis_characterization},
      {{14, "implication chain", 300}, implication_chain},
      {{15, "saturation laws", 300}, saturation},
  };
  return all;
}

}  // namespace

std::vector<CriterionInfo> criteria() {
  std::vector<CriterionInfo> out;
  for (const Entry& e : entries()) out.push_back(e.info);
  return out;
}

CriterionResult run_criterion(int id) {
  if (id < 1 || id > static_cast<int>(entries().size()))
    fail(ErrorCode::UnknownSuite, "no criterion " + std::to_string(id));
  const Entry& e = entries()[id - 1];
  CriterionResult r;
  r.info = e.info;
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  try {
    e.run(t);
  } catch (const Error& err) {
    t.check(false, [&] { return std::string("error: ") + err.what(); });
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.instances = t.instances;
  r.holds = t.failure.empty();
  r.detail = r.holds ? std::to_string(t.instances) + " checks" : t.failure;
  return r;
}

std::string format_result(const CriterionResult& r) {
  char head[160];
  std::snprintf(head, sizeof head, "%s %2d %-32s %8.3fs (limit %gs) ", r.passed() ? "PASS" : "FAIL", r.info.id,
                r.info.name.c_str(), r.seconds, r.info.limit_seconds);
  std::string out = head + r.detail;
  if (r.holds && !r.passed()) out += "; over time limit";
  return out;
}

}  // namespace stonework
