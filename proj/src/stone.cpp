#include "stonework/stone.hpp"

#include <algorithm>

#include "detail/upsets.hpp"
#include "stonework/axioms.hpp"

namespace stonework {

bool is_succ_closed(const P0Set& b, Mask u) {
  bool ok = true;
  for_each_bit(u, [&](int y) { ok = ok && subset_of(b.succ(y), u); });
  return ok;
}

bool is_prec_directed(const P0Set& b, Mask u) {
  bool ok = true;
  for_each_bit(u, [&](int x) {
    for_each_bit(u, [&](int y) { ok = ok && (b.pred(x) & b.pred(y) & u); });
  });
  return ok;
}

bool is_prec_filter(const P0Set& b, Mask u) { return is_succ_closed(b, u) && is_prec_directed(b, u); }

bool is_preceq_directed(const P0Set& b, Mask u) {
  bool ok = true;
  for_each_bit(u, [&](int x) {
    for_each_bit(u, [&](int y) { ok = ok && (b.down(x) & b.down(y) & u); });
  });
  return ok;
}

bool is_preceq_filter(const P0Set& b, Mask u) {
  bool closed = true;
  for_each_bit(u, [&](int y) { closed = closed && subset_of(b.up(y), u); });
  return closed && is_preceq_directed(b, u);
}

bool is_prec_coinitial(const P0Set& b, Mask u) { return subset_of(u, prec_up(b, u)); }

Mask prec_up(const P0Set& b, Mask u) {
  Mask out = 0;
  for_each_bit(u, [&](int x) { out |= b.succ(x); });
  return out;
}

bool is_preceq_ideal(const P0Set& b, Mask u) {
  bool ok = true;
  for_each_bit(u, [&](int y) { ok = ok && subset_of(b.down(y), u); });
  for_each_bit(u, [&](int x) {
    for_each_bit(u, [&](int y) { ok = ok && (b.up(x) & b.up(y) & u); });
  });
  return ok;
}

std::vector<Filter> enumerate_filters(const P0Set& b, std::int64_t budget) {
  std::vector<Mask> up, down;
  for (int x = 0; x < b.size(); ++x) {
    up.push_back(b.succ(x));
    down.push_back(b.pred(x));
  }
  std::vector<Filter> out;
  detail::for_each_up_set(b.all(), up, down, 0, 0, budget, [&](Mask u) {
    if (is_prec_directed(b, u)) out.push_back({u, u != b.all(), u != 0});
  });
  std::sort(out.begin(), out.end(), [](const Filter& a, const Filter& c) { return a.members < c.members; });
  return out;
}

std::vector<Mask> enumerate_ultrafilters(const P0Set& b, std::int64_t budget) {
  std::vector<Mask> proper;
  for (const Filter& f : enumerate_filters(b, budget))
    if (f.proper) proper.push_back(f.members);
  std::vector<Mask> out;
  for (Mask u : proper) {
    bool maximal = std::none_of(proper.begin(), proper.end(),
                                [&](Mask v) { return v != u && subset_of(u, v); });
    if (maximal) out.push_back(u);
  }
  return out;
}

Report ultrafilter_properties(const P0Set& b, Mask u) {
  if (u == 0 || u == b.all() || !is_prec_filter(b, u))
    fail(ErrorCode::NotAFilter, "expected a nonempty proper filter");
  const Mask rest = b.all() & ~u;
  const auto ultras = enumerate_ultrafilters(b);
  const bool ultra = std::find(ultras.begin(), ultras.end(), u) != ultras.end();
  const bool prime = is_preceq_ideal(b, rest);

  Mask compy_set = 0;
  for (int y = 0; y < b.size(); ++y) {
    bool all = true;
    for_each_bit(b.pred(y), [&](int x) { all = all && (u & b.perp_row(x)); });
    if (all) compy_set |= bit(y);
  }
  const bool compy = compy_set == rest;

  Report r("ultrafilter_properties");
  r.info("ultrafilter", ultra);
  r.info("complement_is_ideal", prime);
  r.info("compy", compy, bits_of(compy_set ^ rest));
  if (check_basic_lattice(b).passed())
    r.add("equivalent", ultra == prime && prime == compy);
  else
    r.not_applicable("equivalent");
  return r;
}

StoneSpace stone_space(const P0Set& b, std::int64_t budget) {
  StoneSpace s;
  for (Mask u : enumerate_ultrafilters(b, budget))
    if (u) s.points.push_back(u);
  require_cap(static_cast<int>(s.points.size()), kMaxElements, "stone_space");
  std::vector<Mask> basis(b.size(), 0);
  std::vector<int> source(b.size());
  for (int x = 0; x < b.size(); ++x) {
    source[x] = x;
    for (int p = 0; p < static_cast<int>(s.points.size()); ++p)
      if (has(s.points[p], x)) basis[x] |= bit(p);
  }
  s.top = generated_topology(static_cast<int>(s.points.size()), std::move(basis), std::move(source));
  return s;
}

Report verify_duality(const P0Set& b) {
  if (!check_basic_lattice(b).passed())
    fail(ErrorCode::PreconditionFailed, "duality needs a basic lattice");
  const LatticeTables t = lattice_tables(b);
  const StoneSpace s = stone_space(b);
  const int n = b.size();
  auto O = [&](int x) { return s.basic_open(x); };

  std::vector<int> cap_w, cup_w, perp_w, sub_w, clo_w, iso_w;
  for (int x = 0; x < n; ++x) {
    const Mask cl = s.top.closure(O(x));
    Mask above = s.top.all();
    for_each_bit(b.succ(x), [&](int y) { above &= O(y); });
    if (clo_w.empty() && cl != above) clo_w = {x};
    for (int y = 0; y < n; ++y) {
      if (cap_w.empty() && (O(x) & O(y)) != O(t.m(x, y))) cap_w = {x, y};
      if (cup_w.empty() && (O(x) | O(y)) != O(t.j(x, y))) cup_w = {x, y};
      if (perp_w.empty() && ((O(x) & O(y)) == 0) != b.perp(x, y)) perp_w = {x, y};
      if (sub_w.empty() && subset_of(cl, O(y)) != b.prec(x, y)) sub_w = {x, y};
      if (iso_w.empty() && subset_of(O(x), O(y)) != b.preceq(x, y)) iso_w = {x, y};
    }
  }
  int p = -1, q = -1;
  const bool hausdorff = is_hausdorff(s.top, &p, &q);

  Report r("duality");
  r.add("capwedge", cap_w.empty(), cap_w);
  r.add("cupvee", cup_w.empty(), cup_w);
  r.add("perpperp", perp_w.empty(), perp_w);
  r.add("subprec", sub_w.empty(), sub_w);
  r.add("Oxclosure", clo_w.empty(), clo_w);
  r.add("hausdorff", hausdorff, hausdorff ? std::vector<int>{} : std::vector<int>{p, q});
  r.add("iso", iso_w.empty(), iso_w);
  r.info("locally_compact", true);
  return r;
}

P0Set basis_to_structure(const FiniteTopology& x, const std::vector<Mask>& family) {
  require_cap(static_cast<int>(family.size()), kMaxElements, "basis_to_structure");
  int zero = -1;
  for (int i = 0; i < static_cast<int>(family.size()); ++i) {
    if (!x.is_open(family[i])) fail(ErrorCode::NotOpen, "family member is not open", {i});
    if (family[i] == 0) zero = i;
    for (int j = 0; j < i; ++j)
      if (family[i] == family[j]) fail(ErrorCode::PreconditionFailed, "family repeats a member", {j, i});
  }
  if (zero < 0) fail(ErrorCode::PreconditionFailed, "family must contain the empty set");
  std::vector<Mask> rows(family.size(), 0);
  std::vector<std::string> names;
  for (int i = 0; i < static_cast<int>(family.size()); ++i) {
    const Mask cl = x.closure(family[i]);
    for (int j = 0; j < static_cast<int>(family.size()); ++j)
      if (subset_of(cl, family[j])) rows[i] |= bit(j);
    std::string nm = "{";
    for_each_bit(family[i], [&](int pt) { nm += (nm.size() > 1 ? "," : "") + std::to_string(pt); });
    names.push_back(nm + "}");
  }
  return P0Set::from_rows(zero, std::move(rows), std::move(names));
}

Mask point_filter(const std::vector<Mask>& family, int p) {
  Mask m = 0;
  for (int i = 0; i < static_cast<int>(family.size()); ++i)
    if (has(family[i], p)) m |= bit(i);
  return m;
}

Report basis_round_trip(const FiniteTopology& x, const std::vector<Mask>& family) {
  const P0Set b = basis_to_structure(x, family);
  Report r("basis_round_trip");
  const Report bl = check_basic_lattice(b);
  const Verdict* bad = bl.first_failure();
  r.add("basic_lattice", bl.passed(), bad ? bad->witness : std::vector<int>{});

  const StoneSpace s = stone_space(b);
  r.add("stone_points", static_cast<int>(s.points.size()) == x.points,
        {static_cast<int>(s.points.size()), x.points});

  std::vector<Mask> images;
  for (int p = 0; p < x.points; ++p) images.push_back(point_filter(family, p));
  std::vector<Mask> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  std::vector<Mask> pts = s.points;
  std::sort(pts.begin(), pts.end());
  r.add("point_filter_bijective", injective && sorted == pts);
  return r;
}

}  // namespace stonework
