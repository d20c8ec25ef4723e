#include "stonework/tight.hpp"

#include <algorithm>
#include <set>

#include "stonework/kernels.hpp"
#include "stonework/saturation.hpp"

namespace stonework {

namespace {

bool is_gba(const P0Set& b) {
  const Report r = order_predicates(b);
  return r.applicable("generalized_boolean") && r.holds("generalized_boolean");
}

bool is_meet_semilattice(const P0Set& b) {
  const Report r = order_predicates(b);
  return r.applicable("meet_semilattice") && r.holds("meet_semilattice");
}

std::vector<int> subset_pair(Mask f, Mask g) { return {static_cast<int>(f), static_cast<int>(g)}; }

// Per-subset cover data: lb[F] = F_⪰ ∖ {0}, mu[G] = G^⋒, so F ⪅ G ⇔ lb[F] ⊆ mu[G].
struct CoverTables {
  std::vector<Mask> lb, mu;
};

CoverTables cover_tables(const P0Set& v, std::span<const Mask> down_rows, std::span<const Mask> meet_rows) {
  CoverTables t;
  const std::size_t subsets = std::size_t{1} << down_rows.size();
  t.lb.resize(subsets);
  t.mu.resize(subsets);
  kernels::subset_fold_and(down_rows, v.all(), t.lb);
  for (Mask& m : t.lb) m &= v.nonzero();
  kernels::subset_fold_or(meet_rows, 0, t.mu);
  return t;
}

CoverTables source_covers(const P0Set& v) {
  std::vector<Mask> down, meets;
  for (int x = 0; x < v.size(); ++x) {
    down.push_back(v.down(x));
    meets.push_back(v.meets_row(x));
  }
  return cover_tables(v, down, meets);
}

struct MapTables {
  CoverTables src, tgt;
};

MapTables map_tables(const StructMap& beta) {
  const P0Set vs = beta.source.reflexive_view();
  const P0Set va = beta.target.reflexive_view();
  std::vector<Mask> down, meets;
  for (int x = 0; x < vs.size(); ++x) {
    down.push_back(va.down(beta(x)));
    meets.push_back(va.meets_row(beta(x)));
  }
  return {source_covers(vs), cover_tables(va, down, meets)};
}

// First (F, G) with F ⪅ G but not β[F] ⪅ β[G], over nonempty F or F = ∅.
struct TightScan {
  std::vector<int> nonempty_violation, empty_violation;
};

TightScan scan_tightness(const MapTables& t) {
  TightScan s;
  const std::size_t subsets = t.src.lb.size();
  for (std::size_t f = 0; f < subsets; ++f) {
    const std::size_t g = kernels::find_implication_violation(t.src.lb[f], t.tgt.lb[f], t.src.mu, t.tgt.mu);
    if (g == subsets) continue;
    if (f == 0) {
      s.empty_violation = subset_pair(0, static_cast<Mask>(g));
    } else {
      s.nonempty_violation = subset_pair(static_cast<Mask>(f), static_cast<Mask>(g));
      break;
    }
  }
  return s;
}

void check_map(const StructMap& beta) {
  require_cap(beta.source.size(), 12, "map_properties");
  if (beta(beta.source.zero()) != beta.target.zero())
    fail(ErrorCode::ZeroNotPreserved, "the map does not send zero to zero", {beta.source.zero()});
}

// x ∖ y in a generalized Boolean algebra: the z with z ∧ (x ∧ y) = 0 and z ∨ (x ∧ y) = x.
std::vector<int> minus_table(const LatticeTables& t, int zero) {
  std::vector<int> out(t.n * t.n, -1);
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y) {
      const int xy = t.m(x, y);
      for (int z = 0; z < t.n; ++z)
        if (t.m(z, xy) == zero && t.j(z, xy) == x) {
          out[x * t.n + y] = z;
          break;
        }
      if (out[x * t.n + y] < 0) fail(ErrorCode::NotGBA, "relative complement missing", {x, y});
    }
  return out;
}

struct Gba {
  LatticeTables t;
  std::vector<int> minus;
  int zero = 0;
  int top = -1;

  explicit Gba(const P0Set& a) : t(lattice_tables(a)), minus(minus_table(t, a.zero())), zero(a.zero()) {
    for (int x = 0; x < a.size(); ++x)
      if (a.down(x) == a.all()) top = x;
  }
  int m(int x, int y) const { return t.m(x, y); }
  int j(int x, int y) const { return t.j(x, y); }
  int d(int x, int y) const { return minus[x * t.n + y]; }
};

struct Alexandroff {
  Mask nz = 0;
  std::vector<Mask> up, down;

  explicit Alexandroff(const P0Set& b) : nz(b.nonzero()) {
    const P0Set v = b.reflexive_view();
    for (int x = 0; x < v.size(); ++x) {
      up.push_back(v.up(x) & nz);
      down.push_back(v.down(x) & nz);
    }
  }
  Mask closure(Mask y) const {
    Mask out = 0;
    for_each_bit(y & nz, [&](int i) { out |= up[i] | bit(i); });
    return out;
  }
  Mask interior(Mask y) const {
    Mask out = 0;
    for_each_bit(y & nz, [&](int i) {
      if (subset_of(down[i], y)) out |= bit(i);
    });
    return out;
  }
  Mask regularize(Mask y) const { return interior(closure(y)); }
  Mask rho(int x) const { return regularize(down[x]); }
};

}  // namespace

Mask StructMap::image(Mask f) const {
  Mask out = 0;
  for_each_bit(f, [&](int x) { out |= bit(assignment[x]); });
  return out;
}

StructMap make_map(P0Set source, P0Set target, std::vector<int> assignment) {
  if (static_cast<int>(assignment.size()) != source.size())
    fail(ErrorCode::DimensionMismatch, "map length differs from the source size",
         {static_cast<int>(assignment.size()), source.size()});
  for (int x = 0; x < source.size(); ++x)
    if (assignment[x] < 0 || assignment[x] >= target.size())
      fail(ErrorCode::IndexOutOfRange, "map value outside the target", {x, assignment[x]});
  return StructMap{std::move(source), std::move(target), std::move(assignment)};
}

Mask lower_bounds(const P0Set& b, Mask c) {
  const P0Set v = b.reflexive_view();
  Mask out = v.all();
  for_each_bit(c, [&](int x) { out &= v.down(x); });
  return out;
}

bool covers(const P0Set& b, Mask c, Mask d) {
  const P0Set v = b.reflexive_view();
  Mask meeting = 0;
  for_each_bit(d, [&](int y) { meeting |= v.meets_row(y); });
  return subset_of(lower_bounds(b, c), meeting | bit(v.zero()));
}

Report map_properties(const StructMap& beta) {
  check_map(beta);
  const MapTables t = map_tables(beta);
  const TightScan s = scan_tightness(t);
  Report r("map_properties");
  const bool tightish = s.nonempty_violation.empty();
  r.info("tight", tightish && s.empty_violation.empty(),
         tightish ? s.empty_violation : s.nonempty_violation);
  r.info("tightish", tightish, s.nonempty_violation);

  const P0Set va = beta.target.reflexive_view();
  Mask reached = 0;
  for (int x = 0; x < beta.source.size(); ++x)
    if (beta(x) != va.zero()) reached |= va.up(beta(x));
  std::vector<int> missed;
  for_each_bit(va.nonzero() & ~reached, [&](int a) {
    if (missed.empty()) missed = {a};
  });
  r.info("coinitial", missed.empty(), missed);
  const bool gba = is_gba(beta.target);
  r.info("representation", gba);
  r.info("character", gba && beta.target.size() == 2);
  return r;
}

Report verify_tight_equivalences(const StructMap& beta) {
  check_map(beta);
  const MapTables t = map_tables(beta);
  const TightScan s = scan_tightness(t);
  const bool tightish = s.nonempty_violation.empty();
  const bool tight = tightish && s.empty_violation.empty();
  const P0Set& src = beta.source;
  const int n = src.size();
  const Mask subsets = bit(n);
  Report r("tight_equivalences");

  // (a) a single cover of B preserved by β upgrades tightish to tight.
  std::vector<int> cover_g;
  for (Mask g = 0; g < subsets && cover_g.empty(); ++g)
    if (subset_of(t.src.lb[0], t.src.mu[g]) && subset_of(t.tgt.lb[0], t.tgt.mu[g])) cover_g = bits_of(g);
  const bool premise = tightish && !cover_g.empty();
  r.info("cover_premise", premise, cover_g);
  r.add("tightish_with_cover_is_tight", !premise || tight, premise && !tight ? s.empty_violation : std::vector<int>{});

  const bool src_meets = is_meet_semilattice(src);
  const bool tgt_gba = is_gba(beta.target);

  // (b) meet semilattice into a generalized Boolean algebra.
  if (src_meets && tgt_gba) {
    const LatticeTables ls = lattice_tables(src);
    const Gba a(beta.target);
    std::vector<int> restricted_w;
    for (int x = 0; x < n && restricted_w.empty(); ++x)
      for (int y = 0; y < n; ++y)
        if (beta(ls.m(x, y)) != a.m(beta(x), beta(y))) {
          restricted_w = {x, y};
          break;
        }
    auto join_image = [&](Mask g) {
      int acc = a.zero;
      for_each_bit(g, [&](int y) { acc = a.j(acc, beta(y)); });
      return acc;
    };
    const P0Set vs = src.reflexive_view();
    const P0Set va = beta.target.reflexive_view();
    for (int x = 0; x < n && restricted_w.empty(); ++x) {
      const Mask dx = vs.down(x);
      for (Mask g = dx;; g = (g - 1) & dx) {
        if (subset_of(t.src.lb[bit(x)], t.src.mu[g]) && !va.preceq(beta(x), join_image(g))) {
          restricted_w = {x, static_cast<int>(g)};
          break;
        }
        if (g == 0) break;
      }
    }
    std::vector<int> top_w;
    for (Mask g = 0; g < subsets && top_w.empty(); ++g)
      if (subset_of(t.src.lb[0], t.src.mu[g]) && (a.top < 0 || join_image(g) != a.top))
        top_w = {static_cast<int>(g)};
    const bool restricted = restricted_w.empty();
    r.info("restricted_tight", restricted, restricted_w);
    r.info("top_condition", top_w.empty(), top_w);
    r.add("tightish_iff_restricted", tightish == restricted);
    r.add("tight_iff_restricted_and_top", tight == (restricted && top_w.empty()));
  } else {
    r.not_applicable("tightish_iff_restricted");
    r.not_applicable("tight_iff_restricted_and_top");
  }

  // (c) between generalized Boolean algebras.
  if (is_gba(src) && tgt_gba) {
    const Gba b(src);
    const Gba a(beta.target);
    std::vector<int> lat_w, minus_w;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (lat_w.empty() &&
            (beta(b.m(x, y)) != a.m(beta(x), beta(y)) || beta(b.j(x, y)) != a.j(beta(x), beta(y))))
          lat_w = {x, y};
        if (minus_w.empty() && beta(b.d(x, y)) != a.d(beta(x), beta(y))) minus_w = {x, y};
      }
    const bool lattice_hom = lat_w.empty();
    const bool gba_hom = lattice_hom && minus_w.empty();
    r.info("lattice_hom", lattice_hom, lat_w);
    r.info("gba_hom", gba_hom, lattice_hom ? minus_w : lat_w);
    r.add("gba_homomorphism_equivalence", tightish == lattice_hom && lattice_hom == gba_hom);
  } else {
    r.not_applicable("gba_homomorphism_equivalence");
  }

  // (d) B^{F,G} ⪍ H ⇔ F ⪅ G ∪ H, with B^{F,G} = F_⪰ ∩ G_⊥.
  if (n <= 8) {
    const P0Set vs = src.reflexive_view();
    std::vector<Mask> perp_rows;
    for (int x = 0; x < n; ++x) perp_rows.push_back(vs.perp_row(x));
    std::vector<Mask> perp_all(subsets);
    kernels::subset_fold_and(perp_rows, vs.all(), perp_all);
    std::vector<int> w;
    for (Mask f = 0; f < subsets && w.empty(); ++f)
      for (Mask g = 0; g < subsets; ++g) {
        // B^{F,G} is ⪯-down-closed, so ⪍ reduces to inclusion in H^⋒ ∪ {0}.
        const Mask bfg = t.src.lb[f] & perp_all[g];
        const Mask rest = t.src.lb[f] & ~t.src.mu[g];
        const std::size_t h = kernels::find_equivalence_mismatch(bfg, rest, t.src.mu, t.src.mu);
        if (h < subsets) {
          w = {static_cast<int>(f), static_cast<int>(g), static_cast<int>(h)};
          break;
        }
      }
    r.add("cover_difference", w.empty(), w);
  } else {
    r.not_applicable("cover_difference");
  }
  return r;
}

AlexandroffOps alexandroff_ops(const P0Set& b, Mask y) {
  const Alexandroff x(b);
  y &= x.nz;
  return {x.closure(y), x.interior(y), x.regularize(y)};
}

Mask regularize(const P0Set& b, Mask y) { return Alexandroff(b).regularize(y); }

Mask rho(const P0Set& b, int x) { return Alexandroff(b).rho(x); }

int RegularOpenAlgebra::index_of(Mask s) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == s) return i;
  return -1;
}

P0Set RegularOpenAlgebra::as_structure() const {
  std::vector<Mask> rows(size(), 0);
  std::vector<std::string> names;
  for (int i = 0; i < size(); ++i) {
    for (int k = 0; k < size(); ++k)
      if (subset_of(elements[i], elements[k])) rows[i] |= bit(k);
    names.push_back(base.format_mask(elements[i]));
  }
  return P0Set::from_rows(0, std::move(rows), std::move(names));
}

RegularOpenAlgebra enveloping_algebra(const P0Set& b) {
  require_cap(b.size(), 14, "enveloping_algebra");
  const Alexandroff x(b);
  std::set<Mask> found{0};
  for (int i = 0; i < b.size(); ++i) found.insert(x.rho(i));
  std::vector<Mask> list(found.begin(), found.end());
  auto add = [&](Mask m) {
    if (found.insert(m).second) {
      list.push_back(m);
      if (list.size() > static_cast<std::size_t>(kMaxElements))
        fail(ErrorCode::CapExceeded, "enveloping algebra has more than 32 elements");
    }
  };
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t k = 0; k <= i; ++k) {
      const Mask p = list[i], q = list[k];
      add(p & q);
      add(x.regularize(p | q));
      add(p & x.interior(x.nz & ~q));
      add(q & x.interior(x.nz & ~p));
    }
  std::sort(list.begin(), list.end(), [](Mask p, Mask q) {
    return popcount(p) != popcount(q) ? popcount(p) < popcount(q) : p < q;
  });

  RegularOpenAlgebra s{b, list, {}, {}, {}, {}};
  const int k = s.size();
  s.meet.resize(k * k);
  s.join.resize(k * k);
  s.minus.resize(k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Mask p = list[i], q = list[j];
      s.meet[i * k + j] = s.index_of(p & q);
      s.join[i * k + j] = s.index_of(x.regularize(p | q));
      s.minus[i * k + j] = s.index_of(p & x.interior(x.nz & ~q));
    }
  for (int i = 0; i < b.size(); ++i) s.rho.push_back(s.index_of(x.rho(i)));
  return s;
}

Report verify_fgrho(const P0Set& b) {
  require_cap(b.size(), kMaxSubsetCarrier, "verify_fgrho");
  const P0Set v = b.reflexive_view();
  const CoverTables t = source_covers(v);
  const Alexandroff x(b);
  std::vector<Mask> rhos;
  for (int i = 0; i < b.size(); ++i) rhos.push_back(x.rho(i));
  const std::size_t subsets = t.lb.size();
  std::vector<Mask> meetrho(subsets), joinrho(subsets);
  kernels::subset_fold_and(rhos, x.nz, meetrho);
  kernels::subset_fold_or(rhos, 0, joinrho);
  for (Mask& m : joinrho) m = x.regularize(m);
  Report r("fgrho");
  std::vector<int> w;
  for (std::size_t f = 0; f < subsets && w.empty(); ++f) {
    const std::size_t g = kernels::find_equivalence_mismatch(t.lb[f], meetrho[f], t.mu, joinrho);
    if (g < subsets) w = subset_pair(static_cast<Mask>(f), static_cast<Mask>(g));
  }
  r.add("equivalence", w.empty(), w);
  return r;
}

namespace {

// ρ(0) = ∅ needs zero to be the only element ⪯ zero.
void require_proper_zero(const P0Set& b) {
  const Mask below = b.reflexive_view().down(b.zero()) & b.nonzero();
  if (below) fail(ErrorCode::PreconditionFailed, "a nonzero element lies below zero", bits_of(below));
}

}  // namespace

Report verify_alexandroff_maps(const P0Set& b) {
  require_cap(b.size(), 6, "verify_alexandroff_maps");
  require_proper_zero(b);
  const Alexandroff x(b);
  auto by_size = [](Mask p, Mask q) {
    return popcount(p) != popcount(q) ? popcount(p) < popcount(q) : p < q;
  };
  std::vector<Mask> opens, regular;
  for (Mask y = 0; y <= x.nz; ++y) {
    if ((y & ~x.nz) != 0) continue;
    if (x.interior(y) == y) opens.push_back(y);
    if (x.regularize(y) == y) regular.push_back(y);
  }
  std::sort(opens.begin(), opens.end(), by_size);
  std::sort(regular.begin(), regular.end(), by_size);
  auto as_structure = [&](const std::vector<Mask>& family) {
    std::vector<Mask> rows(family.size(), 0);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t k = 0; k < family.size(); ++k)
        if (subset_of(family[i], family[k])) rows[i] |= bit(static_cast<int>(k));
      names.push_back(b.format_mask(family[i]));
    }
    return P0Set::from_rows(0, std::move(rows), std::move(names));
  };
  auto index_in = [](const std::vector<Mask>& family, Mask m) {
    return static_cast<int>(std::find(family.begin(), family.end(), m) - family.begin());
  };
  const P0Set o = as_structure(opens);
  const P0Set ro = as_structure(regular);

  Report r("alexandroff_maps");
  std::vector<int> to_open, to_ro;
  for (int i = 0; i < b.size(); ++i) {
    to_open.push_back(index_in(opens, x.down[i]));
    to_ro.push_back(index_in(regular, x.rho(i)));
  }
  const Report open_map = map_properties(StructMap{b, o, to_open});
  r.add("open_map_tight", open_map.holds("tight"), open_map.find("tight")->witness);
  r.add("open_map_coinitial", open_map.holds("coinitial"), open_map.find("coinitial")->witness);

  std::vector<int> meet_w, tight_w, coin_w;
  for (Mask p : opens)
    for (Mask q : opens)
      if (meet_w.empty() && x.regularize(p & q) != (x.regularize(p) & x.regularize(q)))
        meet_w = {static_cast<int>(p), static_cast<int>(q)};
  r.add("regularization_meets", meet_w.empty(), meet_w);
  // Opens are closed under unions and O ↦ reg(O) preserves meets, so the
  // covering conditions only depend on U = ⋃G and singleton G suffice.
  for (Mask p : opens)
    for (Mask u : opens) {
      if (!tight_w.empty()) break;
      if (!subset_of(u, p)) continue;
      bool dense = true;
      for (Mask q : opens)
        if (q && subset_of(q, p) && !(q & u)) dense = false;
      if (dense && !subset_of(x.regularize(p), x.regularize(u))) tight_w = {static_cast<int>(p), static_cast<int>(u)};
    }
  for (Mask u : opens) {
    bool dense = true;
    for (Mask q : opens)
      if (q && !(q & u)) dense = false;
    if (dense && tight_w.empty() && x.regularize(u) != x.nz) tight_w = {static_cast<int>(u)};
  }
  r.add("regularization_tight", tight_w.empty(), tight_w);
  for (Mask q : regular) {
    if (!q || !coin_w.empty()) continue;
    bool hit = false;
    for (Mask p : opens)
      if (x.regularize(p) && subset_of(x.regularize(p), q)) hit = true;
    if (!hit) coin_w = {static_cast<int>(q)};
  }
  r.add("regularization_coinitial", coin_w.empty(), coin_w);

  const Report rho_map = map_properties(StructMap{b, ro, to_ro});
  r.add("rho_tight", rho_map.holds("tight"), rho_map.find("tight")->witness);
  r.add("rho_coinitial", rho_map.holds("coinitial"), rho_map.find("coinitial")->witness);
  return r;
}

std::vector<int> factor_map(const StructMap& beta, const RegularOpenAlgebra& s, ExtensionOrder order) {
  const Gba a(beta.target);
  const int k = s.size();
  std::vector<int> pi(k, -1);
  auto assign = [&](int e, int value) {
    if (pi[e] < 0) {
      pi[e] = value;
      return true;
    }
    if (pi[e] != value)
      fail(ErrorCode::ConstructionIncomplete, "two constructions of one element disagree", {e, pi[e], value});
    return false;
  };

  // Meets of nonempty ρ-images.
  const int n = beta.source.size();
  for (Mask f = 1; f < bit(n); ++f) {
    int e = -1, value = -1;
    for_each_bit(f, [&](int x) {
      e = e < 0 ? s.rho[x] : s.m(e, s.rho[x]);
      value = value < 0 ? beta(x) : a.m(value, beta(x));
    });
    assign(e, value);
  }
  auto close = [&]() {
    for (bool grew = true; grew;) {
      grew = false;
      for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
          if (pi[p] < 0 || pi[q] < 0) continue;
          grew |= assign(s.j(p, q), a.j(pi[p], pi[q]));
          grew |= assign(s.m(p, q), a.m(pi[p], pi[q]));
        }
    }
  };
  close();

  auto missing = [&]() { return std::count(pi.begin(), pi.end(), -1) > 0; };
  while (missing()) {
    std::vector<int> lattice;
    for (int e = 0; e < k; ++e)
      if (pi[e] >= 0) lattice.push_back(e);
    if (order == ExtensionOrder::HighestFirst) std::reverse(lattice.begin(), lattice.end());
    bool extended = false;
    for (int xe : lattice) {
      // L_x = {y ∨ (z ∖ x)} with π′(y ∨ (z ∖ x)) = π(y) ∨ (π(z) ∖ π(x)).
      bool adds = false;
      for (int y : lattice)
        for (int z : lattice)
          if (pi[s.j(y, s.d(z, xe))] < 0) adds = true;
      if (!adds) continue;
      std::vector<int> snapshot = pi;
      for (int y : lattice)
        for (int z : lattice) assign(s.j(y, s.d(z, xe)), a.j(snapshot[y], a.d(snapshot[z], snapshot[xe])));
      extended = true;
      break;
    }
    if (!extended)
      fail(ErrorCode::ConstructionIncomplete, "no extension step reaches the remaining elements");
    close();
  }
  return pi;
}

namespace {

// Counts maps S → A (up to `limit`) preserving ∧, ∨ and ∖ that agree with
// `fixed` wherever it is set.
int count_homomorphisms(const RegularOpenAlgebra& s, const Gba& a, int target_size, const std::vector<int>& fixed,
                        int limit) {
  const int k = s.size();
  std::vector<int> v(k, -1);
  int found = 0;
  // Checks each law instance whose largest index is i, i.e. the ones that
  // just became fully assigned.
  auto consistent = [&](int i) {
    auto ok = [&](int p, int q, int res, int value) {
      return res > i || std::max({p, q, res}) < i || v[res] == value;
    };
    for (int p = 0; p <= i; ++p)
      for (int q = 0; q <= i; ++q) {
        if (!ok(p, q, s.m(p, q), a.m(v[p], v[q]))) return false;
        if (!ok(p, q, s.j(p, q), a.j(v[p], v[q]))) return false;
        if (!ok(p, q, s.d(p, q), a.d(v[p], v[q]))) return false;
      }
    return true;
  };
  auto go = [&](auto&& self, int i) -> void {
    if (found >= limit) return;
    if (i == k) {
      ++found;
      return;
    }
    for (int value = 0; value < target_size; ++value) {
      if (fixed[i] >= 0 && value != fixed[i]) continue;
      v[i] = value;
      if (consistent(i)) self(self, i + 1);
    }
    v[i] = -1;
  };
  go(go, 0);
  return found;
}

}  // namespace

TightFactor factor_tight(const StructMap& beta, ExtensionOrder order) {
  check_map(beta);
  if (!is_gba(beta.target))
    fail(ErrorCode::PreconditionFailed, "the target is not a generalized Boolean algebra");
  require_proper_zero(beta.source);
  const Report props = map_properties(beta);
  if (!props.holds("tightish"))
    fail(ErrorCode::NotTightish, "the map is not tightish", props.find("tightish")->witness);

  RegularOpenAlgebra s = enveloping_algebra(beta.source);
  std::vector<int> pi = factor_map(beta, s, order);
  const Gba a(beta.target);
  Report r("factor_tight");

  std::vector<int> fact_w;
  for (int x = 0; x < beta.source.size(); ++x)
    if (fact_w.empty() && pi[s.rho[x]] != beta(x)) fact_w = {x};
  r.add("factors", fact_w.empty(), fact_w);

  std::vector<int> hom_w;
  const int k = s.size();
  for (int p = 0; p < k && hom_w.empty(); ++p)
    for (int q = 0; q < k; ++q)
      if (pi[s.m(p, q)] != a.m(pi[p], pi[q]) || pi[s.j(p, q)] != a.j(pi[p], pi[q]) ||
          pi[s.d(p, q)] != a.d(pi[p], pi[q])) {
        hom_w = {p, q};
        break;
      }
  r.add("gba_homomorphism", hom_w.empty(), hom_w);

  std::vector<int> fixed(k, -1);
  for (int x = 0; x < beta.source.size(); ++x) fixed[s.rho[x]] = beta(x);
  const int homs = count_homomorphisms(s, a, beta.target.size(), fixed, 2);
  r.add("unique", homs == 1, {homs});

  const std::vector<int> other = factor_map(
      beta, s, order == ExtensionOrder::LowestFirst ? ExtensionOrder::HighestFirst : ExtensionOrder::LowestFirst);
  r.add("order_independent", other == pi);

  StructMap pim{s.as_structure(), beta.target, pi};
  if (k <= 12) {
    const Report pp = map_properties(pim);
    r.add("pi_tightish", pp.holds("tightish"), pp.find("tightish")->witness);
    r.add("tight_preserved", !props.holds("tight") || pp.holds("tight"), pp.find("tight")->witness);
  } else {
    r.not_applicable("pi_tightish");
    r.not_applicable("tight_preserved");
  }
  return TightFactor{std::move(s), std::move(pim), std::move(r)};
}

StructMap compose_maps(const StructMap& beta, const StructMap& beta2) {
  if (!(beta.target == beta2.source))
    fail(ErrorCode::DimensionMismatch, "the maps are not composable");
  std::vector<int> out;
  for (int x = 0; x < beta.source.size(); ++x) out.push_back(beta2(beta(x)));
  return StructMap{beta.source, beta2.target, std::move(out)};
}

namespace {

struct InducedMap {
  RegularOpenAlgebra from, to;
  std::vector<int> pi;
};

InducedMap induce(const StructMap& beta) {
  check_map(beta);
  require_proper_zero(beta.source);
  require_proper_zero(beta.target);
  const Report props = map_properties(beta);
  if (!props.holds("tightish"))
    fail(ErrorCode::NotTightish, "the map is not tightish", props.find("tightish")->witness);
  RegularOpenAlgebra sb = enveloping_algebra(beta.source);
  RegularOpenAlgebra sa = enveloping_algebra(beta.target);
  std::vector<int> gamma;
  for (int x = 0; x < beta.source.size(); ++x) gamma.push_back(sa.rho[beta(x)]);
  const StructMap g{beta.source, sa.as_structure(), std::move(gamma)};
  std::vector<int> pi = factor_map(g, sb, ExtensionOrder::LowestFirst);
  return {std::move(sb), std::move(sa), std::move(pi)};
}

}  // namespace

StructMap induced_algebra_map(const StructMap& beta) {
  InducedMap m = induce(beta);
  return StructMap{m.from.as_structure(), m.to.as_structure(), std::move(m.pi)};
}

Report naturality_square(const StructMap& beta) {
  const InducedMap m = induce(beta);
  Report r("naturality");
  std::vector<int> w;
  for (int x = 0; x < beta.source.size(); ++x)
    if (w.empty() && m.pi[m.from.rho[x]] != m.to.rho[beta(x)]) w = {x};
  r.add("square_commutes", w.empty(), w);

  std::vector<int> id(beta.source.size());
  for (int x = 0; x < beta.source.size(); ++x) id[x] = x;
  const InducedMap idm = induce(StructMap{beta.source, beta.source, id});
  std::vector<int> id_w;
  for (int e = 0; e < idm.from.size(); ++e)
    if (id_w.empty() && idm.pi[e] != e) id_w = {e};
  r.add("identity_law", id_w.empty(), id_w);
  return r;
}

Report functor_law(const StructMap& beta, const StructMap& beta2) {
  const StructMap both = compose_maps(beta, beta2);
  const InducedMap m1 = induce(beta);
  const InducedMap m2 = induce(beta2);
  const InducedMap m12 = induce(both);
  Report r("functor");
  std::vector<int> w;
  for (int e = 0; e < m1.from.size(); ++e)
    if (w.empty() && m12.pi[e] != m2.pi[m1.pi[e]]) w = {e};
  r.add("composition", w.empty(), w);
  return r;
}

}  // namespace stonework
