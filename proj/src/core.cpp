#include "stonework/core.hpp"

#include <algorithm>

namespace stonework {

P0Set P0Set::from_pairs(int size, int zero, std::span<const std::pair<int, int>> prec,
                        std::vector<std::string> names, int cap) {
  if (size < 1) fail(ErrorCode::Format, "size must be positive");
  require_cap(size, cap, "load");
  std::vector<Mask> rows(size, 0);
  for (auto [x, y] : prec) {
    if (x < 0 || x >= size || y < 0 || y >= size)
      fail(ErrorCode::IndexOutOfRange, "pair index outside carrier", {x, y});
    rows[x] |= bit(y);
  }
  return from_rows(zero, std::move(rows), std::move(names), cap);
}

P0Set P0Set::from_rows(int zero, std::vector<Mask> succ_rows, std::vector<std::string> names,
                       int cap) {
  const int n = static_cast<int>(succ_rows.size());
  if (n < 1) fail(ErrorCode::Format, "size must be positive");
  require_cap(n, cap, "load");
  if (zero < 0 || zero >= n) fail(ErrorCode::IndexOutOfRange, "zero outside carrier", {zero});
  const Mask all = full_mask(n);
  for (int x = 0; x < n; ++x)
    if (succ_rows[x] & ~all)
      fail(ErrorCode::IndexOutOfRange, "row refers outside carrier", {x, lowest(succ_rows[x] & ~all)});
  if (!names.empty() && static_cast<int>(names.size()) != n)
    fail(ErrorCode::Format, "names length differs from size");

  for (int x = 0; x < n; ++x) {
    Mask bad = 0;
    int via = -1;
    for_each_bit(succ_rows[x], [&](int y) {
      if (via < 0 && (succ_rows[y] & ~succ_rows[x])) {
        via = y;
        bad = succ_rows[y] & ~succ_rows[x];
      }
    });
    if (via >= 0) fail(ErrorCode::NotTransitive, "relation is not transitive", {x, via, lowest(bad)});
  }
  if (succ_rows[zero] != all)
    fail(ErrorCode::MissingMinimum, "zero is not below every element",
         {zero, lowest(all & ~succ_rows[zero])});

  P0Set b;
  b.n_ = n;
  b.zero_ = zero;
  b.succ_ = std::move(succ_rows);
  b.names_ = std::move(names);
  b.derive();
  return b;
}

void P0Set::derive() {
  pred_.assign(n_, 0);
  for (int x = 0; x < n_; ++x)
    for_each_bit(succ_[x], [&](int y) { pred_[y] |= bit(x); });

  up_.assign(n_, 0);
  down_.assign(n_, 0);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (subset_of(pred_[x], pred_[y])) {
        up_[x] |= bit(y);
        down_[y] |= bit(x);
      }

  const Mask nz = nonzero();
  meets_.assign(n_, 0);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (pred_[x] & pred_[y] & nz) meets_[x] |= bit(y);
}

bool P0Set::is_reflexive() const {
  for (int x = 0; x < n_; ++x)
    if (!prec(x, x)) return false;
  return true;
}

bool P0Set::is_antisymmetric() const {
  for (int x = 0; x < n_; ++x)
    if (up_[x] & down_[x] & ~bit(x)) return false;
  return true;
}

P0Set P0Set::reflexive_view() const {
  P0Set v;
  v.n_ = n_;
  v.zero_ = zero_;
  v.succ_ = up_;
  v.names_ = names_;
  v.derive();
  return v;
}

std::vector<std::pair<int, int>> P0Set::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x)
    for_each_bit(succ_[x], [&](int y) { out.emplace_back(x, y); });
  return out;
}

std::string P0Set::name(int x) const {
  if (x >= 0 && x < static_cast<int>(names_.size())) return names_[x];
  return std::to_string(x);
}

std::string P0Set::format_mask(Mask m) const {
  std::string s = "{";
  bool first = true;
  for_each_bit(m, [&](int i) {
    if (!first) s += ",";
    first = false;
    s += name(i);
  });
  return s + "}";
}

DerivedRels derived_relations(const P0Set& b) {
  DerivedRels d;
  for (int x = 0; x < b.size(); ++x) {
    d.preceq.push_back(b.up(x));
    d.meets.push_back(b.meets_row(x));
    d.perp.push_back(b.perp_row(x));
  }
  return d;
}

namespace {

// Greatest element of `cands` under ⪯ as seen through `below` (below(g) = down-set of g).
// Returns -1 if none; throws on ties.
template <class Below>
int greatest(const P0Set& b, Mask cands, Below below) {
  int found = -1;
  for_each_bit(cands, [&](int g) {
    if (!subset_of(cands, below(g))) return;
    if (found >= 0) fail(ErrorCode::NotAntisymmetric, "bound is not unique", {found, g});
    found = g;
  });
  (void)b;
  return found;
}

std::optional<int> wrap(int i) {
  if (i < 0) return std::nullopt;
  return i;
}

}  // namespace

std::optional<int> meet(const P0Set& b, int x, int y) {
  Mask lower = b.down(x) & b.down(y);
  return wrap(greatest(b, lower, [&](int g) { return b.down(g); }));
}

std::optional<int> join(const P0Set& b, int x, int y) {
  Mask upper = b.up(x) & b.up(y);
  return wrap(greatest(b, upper, [&](int g) { return b.up(g); }));
}

bool LatticeTables::has_all_meets() const {
  return std::find(meet.begin(), meet.end(), -1) == meet.end();
}

bool LatticeTables::has_all_joins() const {
  return std::find(join.begin(), join.end(), -1) == join.end();
}

LatticeTables lattice_tables(const P0Set& b) {
  LatticeTables t;
  const int n = b.size();
  t.n = n;
  for (int x = 0; x < n && t.antisymmetric; ++x) {
    Mask twins = b.up(x) & b.down(x) & ~bit(x);
    if (twins) {
      t.antisymmetric = false;
      t.antisymmetry_witness = {x, lowest(twins)};
    }
  }
  t.meet.assign(n * n, -1);
  t.join.assign(n * n, -1);
  auto pick = [&](Mask cands, auto below) {
    for (Mask m = cands; m; m &= m - 1) {
      int g = lowest(m);
      if (subset_of(cands, below(g))) return g;
    }
    return -1;
  };
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      int m = pick(b.down(x) & b.down(y), [&](int g) { return b.down(g); });
      int j = pick(b.up(x) & b.up(y), [&](int g) { return b.up(g); });
      t.meet[x * n + y] = t.meet[y * n + x] = m;
      t.join[x * n + y] = t.join[y * n + x] = j;
    }
  return t;
}

Report order_predicates(const P0Set& b) {
  const P0Set v = b.is_reflexive() ? b : b.reflexive_view();
  const int n = v.size();
  const int zero = v.zero();
  const LatticeTables t = lattice_tables(v);
  Report r("order_predicates");

  r.add("antisymmetric", t.antisymmetric, t.antisymmetry_witness);

  auto missing = [&](const std::vector<int>& table) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (table[x * n + y] < 0) return std::vector<int>{x, y};
    return std::vector<int>{};
  };
  std::vector<int> no_meet = missing(t.meet);
  std::vector<int> no_join = missing(t.join);
  const bool meet_semi = t.antisymmetric && no_meet.empty();
  const bool lattice = meet_semi && no_join.empty();
  r.add("meet_semilattice", meet_semi, t.antisymmetric ? no_meet : t.antisymmetry_witness);
  r.add("lattice", lattice,
        !t.antisymmetric ? t.antisymmetry_witness : (no_meet.empty() ? no_join : no_meet));

  if (lattice) {
    std::vector<int> dist_w;
    for (int z = 0; z < n && dist_w.empty(); ++z)
      for (int x = 0; x < n && dist_w.empty(); ++x)
        for (int y = 0; y < n && dist_w.empty(); ++y)
          if (v.preceq(z, t.j(x, y)) && !v.preceq(z, t.j(t.m(x, z), t.m(y, z))))
            dist_w = {z, x, y};
    std::vector<int> sc_w;
    for (int z = 0; z < n && sc_w.empty(); ++z)
      for_each_bit(v.down(z), [&](int y) {
        if (!sc_w.empty()) return;
        bool ok = false;
        for (int w = 0; w < n && !ok; ++w) ok = t.m(w, y) == zero && t.j(w, y) == z;
        if (!ok) sc_w = {y, z};
      });
    r.add("distributive", dist_w.empty(), dist_w);
    r.add("section_complemented", sc_w.empty(), sc_w);
    r.add("generalized_boolean", dist_w.empty() && sc_w.empty(),
          !dist_w.empty() ? dist_w : sc_w);
  } else {
    r.not_applicable("distributive");
    r.not_applicable("section_complemented");
    r.add("generalized_boolean", false,
          !t.antisymmetric ? t.antisymmetry_witness : (no_meet.empty() ? no_join : no_meet));
  }

  const Mask nz = v.nonzero();
  std::vector<int> sep_w, ssc_w;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool has_disjoint_part = (v.down(x) & nz & v.perp_row(y)) != 0;
      if (sep_w.empty() && !v.preceq(x, y) && !has_disjoint_part) sep_w = {x, y};
      if (ssc_w.empty() && x != y && v.preceq(y, x) && !has_disjoint_part) ssc_w = {x, y};
    }
  r.add("separative", sep_w.empty(), sep_w);
  r.add("ssc", ssc_w.empty(), ssc_w);
  return r;
}

int relative_complement(const P0Set& b, int x, int y) {
  const P0Set v = b.is_reflexive() ? b : b.reflexive_view();
  if (!order_predicates(v).holds("generalized_boolean"))
    fail(ErrorCode::NotGBA, "relative complement needs a generalized Boolean algebra");
  const int xy = *meet(v, x, y);
  for (int z = 0; z < v.size(); ++z)
    if (meet(v, z, xy) == v.zero() && join(v, z, xy) == x) return z;
  fail(ErrorCode::NotGBA, "no relative complement found", {x, y});
}

Report auxiliarity_report(const P0Set& b) {
  const int n = b.size();
  Report r("auxiliarity");
  std::vector<int> left_w, dom_w;
  for (int x = 0; x < n; ++x)
    for_each_bit(b.succ(x), [&](int z) {
      if (left_w.empty() && (b.up(z) & ~b.succ(x))) left_w = {x, z, lowest(b.up(z) & ~b.succ(x))};
      if (dom_w.empty() && !b.preceq(x, z)) dom_w = {x, z};
    });
  r.add("left_auxiliarity", left_w.empty(), left_w);
  r.add("domination", dom_w.empty(), dom_w);
  return r;
}

}  // namespace stonework
