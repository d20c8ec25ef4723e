#include "stonework/spectrum.hpp"

#include <algorithm>

#include "detail/upsets.hpp"
#include "stonework/kernels.hpp"
#include "stonework/stone.hpp"
#include "stonework/tight.hpp"

namespace stonework {

namespace {

bool flag(const Report& r, std::string_view name) { return r.applicable(name) && r.holds(name); }

std::vector<int> pair_of(Mask a, Mask b) { return {static_cast<int>(a), static_cast<int>(b)}; }

// lb[F] = F_⪰ ∖ {0} and mu[G] = G^⋒ over all subsets, on (B, ⪯).
void cover_folds(const P0Set& v, std::vector<Mask>& lb, std::vector<Mask>& mu) {
  std::vector<Mask> down, meets;
  for (int x = 0; x < v.size(); ++x) {
    down.push_back(v.down(x));
    meets.push_back(v.meets_row(x));
  }
  lb.assign(std::size_t{1} << v.size(), 0);
  mu.assign(lb.size(), 0);
  kernels::subset_fold_and(down, v.all(), lb);
  for (Mask& m : lb) m &= v.nonzero();
  kernels::subset_fold_or(meets, 0, mu);
}

CharacterSet literal_characters(const P0Set& b, std::string_view property) {
  require_cap(b.size(), 10, "literal character enumeration");
  const P0Set two = two_element_algebra();
  CharacterSet out{b, {}};
  for (Mask u = 1; u <= b.all(); ++u) {
    if (has(u, b.zero())) continue;
    std::vector<int> values(b.size());
    for (int x = 0; x < b.size(); ++x) values[x] = has(u, x) ? 1 : 0;
    if (map_properties(StructMap{b, two, values}).holds(property)) out.chars.push_back(u);
  }
  return out;
}

}  // namespace

Mask CharacterSet::basic_open(int x) const {
  Mask m = 0;
  for (int i = 0; i < size(); ++i)
    if (has(chars[i], x)) m |= bit(i);
  return m;
}

P0Set two_element_algebra() { return P0Set::from_rows(0, {0b11, 0b10}, {"0", "1"}); }

CharacterSet tight_characters(const P0Set& b, std::int64_t budget) {
  require_cap(b.size(), kMaxElements, "tight_characters");
  const P0Set v = b.reflexive_view();
  std::vector<Mask> up, down;
  for (int x = 0; x < v.size(); ++x) {
    up.push_back(v.up(x));
    down.push_back(v.down(x));
  }
  CharacterSet out{b, {}};
  // Tight φ preserve ⪯, and the worst case of F ⪅ G with φ[F] = {1},
  // φ[G] = {0} is F = U, G = B ∖ U.
  detail::for_each_up_set(v.all(), up, down, 0, down[v.zero()], budget, [&](Mask u) {
    if (!u) return;
    Mask lb = v.all();
    Mask mu = 0;
    for_each_bit(u, [&](int x) { lb &= down[x]; });
    for_each_bit(v.all() & ~u, [&](int y) { mu |= v.meets_row(y); });
    if (!subset_of(lb & v.nonzero(), mu)) out.chars.push_back(u);
  });
  std::sort(out.chars.begin(), out.chars.end());
  return out;
}

CharacterSet tight_characters_literal(const P0Set& b) { return literal_characters(b, "tight"); }

CharacterSet tightish_characters_literal(const P0Set& b) { return literal_characters(b, "tightish"); }

std::vector<Mask> maximal_centred_sets(const P0Set& b) {
  require_cap(b.size(), 12, "maximal_centred_sets");
  std::vector<Mask> lb, mu;
  cover_folds(b.reflexive_view(), lb, mu);
  std::vector<char> centred(lb.size(), 0);
  for (Mask c = 0; c < lb.size(); ++c) {
    bool ok = true;
    for (Mask f = c;; f = (f - 1) & c) {
      if (!lb[f]) {
        ok = false;
        break;
      }
      if (f == 0) break;
    }
    centred[c] = ok;
  }
  std::vector<Mask> out;
  for (Mask c = 0; c < lb.size(); ++c) {
    if (!centred[c]) continue;
    bool maximal = true;
    for_each_bit(b.all() & ~c, [&](int x) {
      if (centred[c | bit(x)]) maximal = false;
    });
    if (maximal) out.push_back(c);
  }
  return out;
}

PseudobasisReport is_pseudobasis(const FiniteTopology& x, const std::vector<Mask>& family) {
  PseudobasisReport p;
  Mask covered = 0;
  bool has_empty = false;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!x.is_open(family[i])) fail(ErrorCode::NotOpen, "family member is not open", {static_cast<int>(i)});
    covered |= family[i];
    has_empty = has_empty || family[i] == 0;
    p.clopen.push_back(x.is_open(x.all() & ~family[i]));
    p.compact.push_back(true);
  }
  p.report.add("minimum", has_empty);
  std::vector<int> uncovered = bits_of(x.all() & ~covered);
  if (uncovered.size() > 1) uncovered.resize(1);
  p.report.add("cover", uncovered.empty(), uncovered);

  std::vector<int> coin_w;
  for (Mask o : x.opens) {
    if (!o) continue;
    const bool hit = std::any_of(family.begin(), family.end(), [&](Mask n) { return n && subset_of(n, o); });
    if (!hit) {
      coin_w = {static_cast<int>(o)};
      break;
    }
  }
  p.report.add("coinitiality", coin_w.empty(), coin_w);

  std::vector<int> t0_w;
  for (int a = 0; a < x.points && t0_w.empty(); ++a)
    for (int c = a + 1; c < x.points; ++c)
      if (point_filter(family, a) == point_filter(family, c)) {
        t0_w = {a, c};
        break;
      }
  p.report.add("t0", t0_w.empty(), t0_w);
  return p;
}

SpectrumSpace spectrum_space(const P0Set& b) {
  SpectrumSpace s{tight_characters(b), {}, Report("spectrum")};
  std::vector<Mask> basis;
  std::vector<int> source;
  for (int x = 0; x < b.size(); ++x) {
    basis.push_back(s.chars.basic_open(x));
    source.push_back(x);
  }
  s.top = discrete_topology(s.chars.size());
  s.top.basis = basis;
  s.top.basis_source = source;
  s.report.merge(is_pseudobasis(s.top, basis).report);
  if (b.size() <= 12) {
    const std::vector<Mask> centred = maximal_centred_sets(b);
    s.report.add("dense", centred == s.chars.chars);
  } else {
    s.report.not_applicable("dense");
  }
  return s;
}

Homeomorphism spectrum_homeomorphism(const FiniteTopology& x, const std::vector<Mask>& family) {
  const PseudobasisReport pb = is_pseudobasis(x, family);
  if (const Verdict* bad = pb.report.first_failure())
    fail(ErrorCode::NotPseudobasis, "not a pseudobasis: " + bad->property, bad->witness);
  for (std::size_t i = 0; i < family.size(); ++i)
    if (!pb.clopen[i]) fail(ErrorCode::NotClopen, "family member is not clopen", {static_cast<int>(i)});

  Homeomorphism h{basis_to_structure(x, family), {}, {}, Report("homeomorphism")};
  const CharacterSet chars = tight_characters(h.structure);
  const int k = static_cast<int>(family.size());
  std::vector<int> tight_w;
  for (int p = 0; p < x.points; ++p) {
    const Mask phi = point_filter(family, p);
    h.phi.push_back(phi);
    const auto it = std::find(chars.chars.begin(), chars.chars.end(), phi);
    h.character_index.push_back(it == chars.chars.end() ? -1 : static_cast<int>(it - chars.chars.begin()));

    bool tight = phi != 0;
    if (tight && k <= 12) {
      std::vector<int> values(k);
      for (int i = 0; i < k; ++i) values[i] = has(phi, i) ? 1 : 0;
      tight = map_properties(StructMap{h.structure, two_element_algebra(), values}).holds("tight");
    } else if (tight) {
      tight = !covers(h.structure, phi, h.structure.all() & ~phi);
    }
    if (!tight && tight_w.empty()) tight_w = {p};
  }
  h.report.add("phi_tight", tight_w.empty(), tight_w);

  std::vector<int> sorted = h.character_index;
  std::sort(sorted.begin(), sorted.end());
  const bool onto = static_cast<int>(sorted.size()) == chars.size() &&
                    std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
                    (sorted.empty() || sorted.front() >= 0);
  h.report.add("bijective", onto, {x.points, chars.size()});

  std::vector<int> image_w;
  for (int i = 0; i < k && onto; ++i) {
    Mask image = 0;
    for_each_bit(family[i], [&](int p) { image |= bit(h.character_index[p]); });
    if (image != chars.basic_open(i) && image_w.empty()) image_w = {i};
  }
  if (onto)
    h.report.add("images_are_basic_opens", image_w.empty(), image_w);
  else
    h.report.not_applicable("images_are_basic_opens");

  if (k <= 12) {
    std::vector<Mask> lb, mu, inter(std::size_t{1} << k), uni(std::size_t{1} << k);
    cover_folds(h.structure.reflexive_view(), lb, mu);
    kernels::subset_fold_and(family, x.all(), inter);
    kernels::subset_fold_or(family, 0, uni);
    std::vector<int> w;
    for (std::size_t f = 0; f < lb.size() && w.empty(); ++f) {
      const std::size_t g = kernels::find_equivalence_mismatch(lb[f], inter[f], mu, uni);
      if (g < lb.size()) w = pair_of(static_cast<Mask>(f), static_cast<Mask>(g));
    }
    h.report.add("cover_formula", w.empty(), w);
  } else {
    h.report.not_applicable("cover_formula");
  }
  return h;
}

Report verify_pseudochar(const P0Set& b) {
  require_cap(b.size(), 10, "verify_pseudochar");
  const bool separative = flag(order_predicates(b), "separative");
  const SpectrumSpace s = spectrum_space(b);
  const P0Set v = b.reflexive_view();
  Report r("pseudochar");
  r.info("separative", separative);

  std::vector<int> inj_w, iso_w;
  for (int x = 0; x < b.size(); ++x)
    for (int y = 0; y < b.size(); ++y) {
      const Mask ox = s.top.basis[x], oy = s.top.basis[y];
      if (x < y && ox == oy && inj_w.empty()) inj_w = {x, y};
      if (v.preceq(x, y) != subset_of(ox, oy) && iso_w.empty()) iso_w = {x, y};
    }
  r.info("injective", inj_w.empty(), inj_w);
  r.info("order_isomorphism", iso_w.empty(), iso_w);
  const bool order = v.is_antisymmetric();
  r.info("partial_order", order);
  if (!order) {
    // The correspondence is about posets; a preorder can put nonzero
    // elements level with 0.
    r.not_applicable("characterization");
    return r;
  }
  r.merge(s.report, "spectrum");
  std::vector<int> clopen_w;
  for (int x = 0; x < b.size(); ++x)
    if (!s.top.is_open(s.top.all() & ~s.top.basis[x]) && clopen_w.empty()) clopen_w = {x};
  r.add("clopen", clopen_w.empty(), clopen_w);
  r.add("characterization", separative == iso_w.empty(), iso_w);
  return r;
}

Report separativity_chain(const P0Set& b) {
  const Report preds = order_predicates(b);
  const bool separative = flag(preds, "separative");
  const bool ssc = flag(preds, "ssc");
  std::vector<Mask> rhos;
  for (int x = 0; x < b.size(); ++x) rhos.push_back(rho(b, x));
  std::vector<int> inj_w;
  for (int x = 0; x < b.size() && inj_w.empty(); ++x)
    for (int y = x + 1; y < b.size(); ++y)
      if (rhos[x] == rhos[y]) {
        inj_w = {x, y};
        break;
      }
  const bool injective = inj_w.empty();
  Report r("separativity_chain");
  r.info("separative", separative, preds.find("separative")->witness);
  r.info("rho_injective", injective, inj_w);
  r.info("ssc", ssc, preds.find("ssc")->witness);
  if (!b.reflexive_view().is_antisymmetric()) {
    r.not_applicable("chain_respected");
    r.not_applicable("semilattice_equivalence");
    return r;
  }
  r.add("chain_respected", (!separative || injective) && (!injective || ssc));
  if (flag(preds, "meet_semilattice"))
    r.add("semilattice_equivalence", separative == injective && injective == ssc);
  else
    r.not_applicable("semilattice_equivalence");
  return r;
}

Report spectrum_vs_stone(const P0Set& b) {
  require_cap(b.size(), 8, "spectrum_vs_stone");
  if (!b.reflexive_view().is_antisymmetric()) {
    Report r("spectrum_vs_stone");
    r.info("partial_order", false);
    r.not_applicable("restriction_bijective");
    r.not_applicable("characters_are_ultrafilters");
    return r;
  }
  const RegularOpenAlgebra s = enveloping_algebra(b);
  const P0Set abstract = s.as_structure();
  const CharacterSet cs = tight_characters(abstract);
  const CharacterSet cb = tight_characters(b);

  std::vector<Mask> restricted;
  for (Mask u : cs.chars) {
    Mask m = 0;
    for (int x = 0; x < b.size(); ++x)
      if (has(u, s.rho[x])) m |= bit(x);
    restricted.push_back(m);
  }
  std::vector<Mask> sorted = restricted;
  std::sort(sorted.begin(), sorted.end());
  const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  std::vector<Mask> ultra;
  for (Mask u : enumerate_ultrafilters(abstract))
    if (u) ultra.push_back(u);

  Report r("spectrum_vs_stone");
  r.add("counts_agree", cb.size() == cs.size() && cs.size() == static_cast<int>(ultra.size()),
        {cb.size(), cs.size(), static_cast<int>(ultra.size())});
  r.add("restriction_bijective", distinct && sorted == cb.chars);
  r.add("characters_are_ultrafilters", ultra == cs.chars);
  return r;
}

}  // namespace stonework
