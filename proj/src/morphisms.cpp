#include "stonework/morphisms.hpp"

#include <algorithm>

#include "stonework/axioms.hpp"
#include "stonework/kernels.hpp"

namespace stonework {

Interpolator identity_interpolator(const P0Set& b) {
  std::vector<Mask> rows;
  for (int x = 0; x < b.size(); ++x) rows.push_back(b.succ(x));
  return Interpolator{b, b, std::move(rows)};
}

Report is_interpolator(const Interpolator& r) {
  const P0Set& B = r.source;
  const P0Set& C = r.target;
  if (!check_basic_lattice(B).passed() || !check_basic_lattice(C).passed())
    fail(ErrorCode::PreconditionFailed, "interpolators join basic lattices");
  if (static_cast<int>(r.rel.size()) != B.size())
    fail(ErrorCode::DimensionMismatch, "relation rows differ from source size");
  const LatticeTables tb = lattice_tables(B);
  const LatticeTables tc = lattice_tables(C);
  const int nb = B.size(), nc = C.size();
  Report rep("interpolator");

  auto first = [&](std::vector<int>& slot, std::vector<int> v) {
    if (slot.empty()) slot = std::move(v);
  };

  std::vector<int> min_w, cof_w, tint_w, sint_w;
  if (r.rel[B.zero()] != C.all()) min_w = {B.zero(), lowest(C.all() & ~r.rel[B.zero()])};
  for (int x = 0; x < nb; ++x) {
    if (!r.rel[x]) first(cof_w, {x});
    for_each_bit(r.rel[x], [&](int y) {
      if (!(r.rel[x] & C.pred(y))) first(tint_w, {x, y});
      bool via_source = false;
      for_each_bit(B.succ(x), [&](int z) { via_source = via_source || r.related(z, y); });
      if (!via_source) first(sint_w, {x, y});
    });
  }
  rep.add("Minimum", min_w.empty(), min_w);
  rep.add("Cofinality", cof_w.empty(), cof_w);
  rep.add("target_interpolation", tint_w.empty(), tint_w);
  rep.add("source_interpolation", sint_w.empty(), sint_w);

  std::vector<int> mult_w, add_w;
  for (int x = 0; x < nb; ++x)
    for_each_bit(r.rel[x], [&](int x2) {
      for (int y = 0; y < nb; ++y)
        for_each_bit(r.rel[y], [&](int y2) {
          if (!r.related(tb.m(x, y), tc.m(x2, y2))) first(mult_w, {x, x2, y, y2});
          if (!r.related(tb.j(x, y), tc.j(x2, y2))) first(add_w, {x, x2, y, y2});
        });
    });
  rep.add("Multiplicativity", mult_w.empty(), mult_w);
  rep.add("Additivity", add_w.empty(), add_w);

  // Rows of the converse relation: below[y] = {x : x ⊏ y}.
  std::vector<Mask> below(nc, 0);
  for (int x = 0; x < nb; ++x) for_each_bit(r.rel[x], [&](int y) { below[y] |= bit(x); });

  std::vector<int> dec_w;
  for (int z = 0; z < nb; ++z)
    for (int x = 0; x < nc; ++x)
      for (int y = 0; y < nc; ++y) {
        if (!r.related(z, tc.j(x, y))) continue;
        bool split = false;
        for_each_bit(below[x], [&](int x2) {
          for_each_bit(below[y], [&](int y2) { split = split || tb.j(x2, y2) == z; });
        });
        if (!split) first(dec_w, {z, x, y});
      }
  rep.add("Decomposition", dec_w.empty(), dec_w);

  // x ⊏ z ≤ y ⇒ x ⊏ y  and  x ⪯ z ⊏ y ⇒ x ⊏ y.
  std::vector<int> le_w, pe_w;
  for (int x = 0; x < nb; ++x) {
    for_each_bit(r.rel[x], [&](int z) {
      Mask bad = C.up(z) & ~r.rel[x];
      if (bad) first(le_w, {x, z, lowest(bad)});
    });
    for_each_bit(B.up(x), [&](int z) {
      Mask bad = r.rel[z] & ~r.rel[x];
      if (bad) first(pe_w, {x, z, lowest(bad)});
    });
  }
  rep.info("target_auxiliarity", le_w.empty(), le_w);
  rep.info("source_auxiliarity", pe_w.empty(), pe_w);
  // Not among the listed axioms, but U^⊏ stays proper only if x ⊏ 0 forces
  // x = 0. Without it induced_stone_map throws NotUltrafilter.
  std::vector<int> zr_w;
  for (int x = 0; x < B.size() && zr_w.empty(); ++x)
    if (x != B.zero() && r.related(x, C.zero())) zr_w = {x};
  rep.info("zero_reflecting", zr_w.empty(), zr_w);
  return rep;
}

Interpolator compose_interpolators(const Interpolator& r, const Interpolator& s) {
  if (!(r.target == s.source))
    fail(ErrorCode::DimensionMismatch, "middle structures differ");
  std::vector<Mask> out(r.rel.size(), 0);
  kernels::compose_rows(r.rel, s.rel, out);
  return Interpolator{r.source, s.target, std::move(out)};
}

Mask preimage(const std::vector<int>& f, Mask s) {
  Mask m = 0;
  for (int p = 0; p < static_cast<int>(f.size()); ++p)
    if (has(s, f[p])) m |= bit(p);
  return m;
}

Mask image_of(const std::vector<int>& f, Mask s) {
  Mask m = 0;
  for_each_bit(s, [&](int p) { m |= bit(f[p]); });
  return m;
}

StoneMap induced_stone_map(const Interpolator& r) {
  const Report valid = is_interpolator(r);
  if (!valid.passed()) {
    const Verdict* v = valid.first_failure();
    fail(ErrorCode::NotInterpolator, "relation fails " + v->property, v->witness);
  }
  StoneMap m{stone_space(r.source), stone_space(r.target), {}, Report("stone_map")};
  for (Mask u : m.from.points) {
    Mask img = 0;
    for_each_bit(u, [&](int x) { img |= r.rel[x]; });
    auto it = std::find(m.to.points.begin(), m.to.points.end(), img);
    if (it == m.to.points.end())
      fail(ErrorCode::NotUltrafilter, "image of an ultrafilter is not an ultrafilter", bits_of(u));
    m.image.push_back(static_cast<int>(it - m.to.points.begin()));
  }

  std::vector<int> cont_w, char_w;
  for (int y = 0; y < r.target.size(); ++y)
    if (cont_w.empty() && !m.from.top.is_open(preimage(m.image, m.to.basic_open(y)))) cont_w = {y};
  for (int x = 0; x < r.source.size(); ++x) {
    const Mask pushed = image_of(m.image, m.from.top.closure(m.from.basic_open(x)));
    for (int y = 0; y < r.target.size(); ++y)
      if (char_w.empty() && r.related(x, y) != subset_of(pushed, m.to.basic_open(y))) char_w = {x, y};
  }
  m.report.add("continuous", cont_w.empty(), cont_w);
  m.report.add("closure_characterization", char_w.empty(), char_w);
  return m;
}

Interpolator interpolator_from_map(const std::vector<int>& f, const FiniteTopology& x,
                                   const std::vector<Mask>& bx, const FiniteTopology& y,
                                   const std::vector<Mask>& by) {
  if (static_cast<int>(f.size()) != x.points)
    fail(ErrorCode::DimensionMismatch, "map length differs from the domain's point count");
  for (int p : f)
    if (p < 0 || p >= y.points) fail(ErrorCode::IndexOutOfRange, "map value outside codomain", {p});
  for (Mask o : y.opens)
    if (!x.is_open(preimage(f, o))) fail(ErrorCode::NotContinuous, "preimage of an open set is not open", bits_of(o));
  Interpolator r{basis_to_structure(x, bx), basis_to_structure(y, by), std::vector<Mask>(bx.size(), 0)};
  for (int i = 0; i < static_cast<int>(bx.size()); ++i) {
    const Mask pushed = image_of(f, x.closure(bx[i]));
    for (int j = 0; j < static_cast<int>(by.size()); ++j)
      if (subset_of(pushed, by[j])) r.rel[i] |= bit(j);
  }
  return r;
}

Report map_round_trip(const std::vector<int>& f, const FiniteTopology& x,
                      const std::vector<Mask>& bx, const FiniteTopology& y,
                      const std::vector<Mask>& by) {
  const StoneMap m = induced_stone_map(interpolator_from_map(f, x, bx, y, by));
  std::vector<int> bad;
  for (int p = 0; p < x.points && bad.empty(); ++p) {
    auto src = std::find(m.from.points.begin(), m.from.points.end(), point_filter(bx, p));
    if (src == m.from.points.end()) {
      bad = {p};
      break;
    }
    const Mask got = m.to.points[m.image[src - m.from.points.begin()]];
    if (got != point_filter(by, f[p])) bad = {p};
  }
  Report r("map_round_trip");
  r.merge(m.report);
  r.add("agrees_with_map", bad.empty(), bad);
  return r;
}

}  // namespace stonework
