#include "stonework/axioms.hpp"

#include <algorithm>

namespace stonework {

namespace {

using Witness = std::vector<int>;

// Records the first failure; later failures are ignored.
struct FirstFailure {
  Witness w;
  bool found = false;
  void operator()(Witness x) {
    if (!found) {
      found = true;
      w = std::move(x);
    }
  }
};

Witness lattice_failure(const LatticeTables& t) {
  if (!t.antisymmetric) return t.antisymmetry_witness;
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y)
      if (t.m(x, y) < 0 || t.j(x, y) < 0) return {x, y};
  return {};
}

}  // namespace

Report check_basic_lattice(const P0Set& b) {
  const int n = b.size();
  const int zero = b.zero();
  const Mask nz = b.nonzero();
  const LatticeTables t = lattice_tables(b);
  const bool lattice = t.is_lattice();
  Report r("basic_lattice");

  r.add("Minimum", true);
  r.add("Transitivity", true);
  r.add("lattice", lattice, lattice_failure(t));

  FirstFailure coin, cofin, interp;
  for (int x = 0; x < n; ++x) {
    if (x != zero && !b.meets(x, x)) coin({x});
    if (!b.succ(x)) cofin({x});
    for_each_bit(b.succ(x), [&](int y) {
      bool ok = false;
      for_each_bit(b.succ(x), [&](int z) { ok = ok || b.prec(z, y); });
      if (!ok) interp({x, y});
    });
  }
  r.add("Coinitiality", !coin.found, coin.w);
  r.add("Cofinality", !cofin.found, cofin.w);
  r.add("Interpolation", !interp.found, interp.w);

  FirstFailure riesz;
  for (int x = 0; x < n; ++x)
    for (int x2 = 0; x2 < n; ++x2)
      for (int y = 0; y < n; ++y)
        for (int y2 = 0; y2 < n; ++y2) {
          Mask lower = b.succ(x) & b.succ(x2);
          if (!has(lower, y) || !has(lower, y2)) continue;
          bool ok = false;
          for_each_bit(lower, [&](int z) { ok = ok || (b.prec(z, y) && b.prec(z, y2)); });
          if (!ok) riesz({x, x2, y, y2});
        }

  FirstFailure right_aux;
  for (int x = 0; x < n; ++x)
    for_each_bit(b.up(x), [&](int z) {
      Mask bad = b.succ(z) & ~b.succ(x);
      if (bad) right_aux({x, z, lowest(bad)});
    });

  if (!lattice) {
    for (const char* p : {"Multiplicativity", "Additivity", "Decomposition", "Complementation"})
      r.not_applicable(p);
    for (const char* p : {"Distributivity", "RatherBelow", "PrecBelow"}) r.info(p, std::nullopt);
    r.info("RightAuxiliarity", !right_aux.found, right_aux.w);
    r.info("RieszInterpolation", !riesz.found, riesz.w);
    r.info("VeeInterpolation", std::nullopt);
    return r;
  }

  FirstFailure mult, add;
  for (int x = 0; x < n; ++x)
    for_each_bit(b.succ(x), [&](int x2) {
      for (int y = 0; y < n; ++y)
        for_each_bit(b.succ(y), [&](int y2) {
          if (!b.prec(t.m(x, y), t.m(x2, y2))) mult({x, x2, y, y2});
          if (!b.prec(t.j(x, y), t.j(x2, y2))) add({x, x2, y, y2});
        });
    });
  r.add("Multiplicativity", !mult.found, mult.w);
  r.add("Additivity", !add.found, add.w);

  FirstFailure decomp, vee;
  for (int z = 0; z < n; ++z)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (!b.prec(z, t.j(x, y))) continue;
        bool split = false, below = false;
        for_each_bit(b.pred(x), [&](int x2) {
          for_each_bit(b.pred(y), [&](int y2) {
            split = split || t.j(x2, y2) == z;
            below = below || b.prec(z, t.j(x2, y2));
          });
        });
        if (!split) decomp({z, x, y});
        if (!below) vee({z, x, y});
      }
  r.add("Decomposition", !decomp.found, decomp.w);

  FirstFailure compl_;
  for (int x = 0; x < n; ++x)
    for_each_bit(b.succ(x), [&](int y) {
      for_each_bit(b.succ(y), [&](int z) {
        bool ok = false;
        for_each_bit(b.perp_row(x), [&](int w) { ok = ok || t.j(w, y) == z; });
        if (!ok) compl_({x, y, z});
      });
    });
  r.add("Complementation", !compl_.found, compl_.w);

  FirstFailure dist;
  for (int z = 0; z < n; ++z)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (b.preceq(z, t.j(x, y)) != b.preceq(z, t.j(t.m(x, z), t.m(y, z)))) dist({z, x, y});
  r.info("Distributivity", !dist.found, dist.w);

  FirstFailure rather, prec_below;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool rhs = true;
      for (int z = 0; z < n; ++z) {
        bool some = false, some_strict = false;
        for_each_bit(b.perp_row(x), [&](int w) {
          some = some || b.preceq(z, t.j(w, y));
          some_strict = some_strict || b.prec(z, t.j(w, y));
        });
        rhs = rhs && some;
        if (b.prec(x, y) && !some_strict) prec_below({x, y, z});
      }
      if (rhs != b.prec(x, y)) rather({x, y});
    }
  r.info("RatherBelow", !rather.found, rather.w);
  r.info("PrecBelow", !prec_below.found, prec_below.w);
  r.info("RightAuxiliarity", !right_aux.found, right_aux.w);
  r.info("RieszInterpolation", !riesz.found, riesz.w);
  r.info("VeeInterpolation", !vee.found, vee.w);
  (void)nz;
  return r;
}

Report check_alternate_axioms(const P0Set& b) {
  const LatticeTables t = lattice_tables(b);
  if (!t.is_lattice()) fail(ErrorCode::NotLattice, "alternate axioms need a lattice", lattice_failure(t));
  Report full = check_basic_lattice(b);
  if (!full.holds("Cofinality"))
    fail(ErrorCode::PreconditionFailed, "alternate axioms need Cofinality", full.find("Cofinality")->witness);

  auto first_of = [&](std::initializer_list<const char*> names) {
    for (const char* p : names) {
      const Verdict* v = full.find(p);
      if (!*v->holds) return std::pair<bool, Witness>{false, v->witness};
    }
    return std::pair<bool, Witness>{true, {}};
  };
  auto [ima, ima_w] = first_of({"Interpolation", "Multiplicativity", "Additivity"});
  auto [rr, rr_w] = first_of({"RightAuxiliarity", "RieszInterpolation"});
  Report r("alternate_axioms");
  r.info("interpolation_multiplicativity_additivity", ima, ima_w);
  r.info("right_auxiliarity_riesz", rr, rr_w);
  r.add("equivalent", ima == rr);
  return r;
}

std::vector<Mask> recover_prec(const P0Set& b) {
  const LatticeTables t = lattice_tables(b);
  if (!t.is_lattice()) fail(ErrorCode::NotLattice, "recovering ≺ needs a lattice", lattice_failure(t));
  const int n = b.size();
  std::vector<Mask> rows(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool all = true;
      for (int z = 0; z < n && all; ++z) {
        bool some = false;
        for_each_bit(b.perp_row(x), [&](int w) { some = some || b.preceq(z, t.j(w, y)); });
        all = some;
      }
      if (all) rows[x] |= bit(y);
    }
  return rows;
}

namespace {

bool cover_dfs(Mask left, const std::vector<Mask>& sets, int depth, std::vector<int>& chosen) {
  if (!left) return true;
  if (depth == 0) return false;
  const Mask t = left & (~left + 1);
  for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
    if (!(sets[i] & t)) continue;
    chosen.push_back(i);
    if (cover_dfs(left & ~sets[i], sets, depth - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> min_cover(Mask target, std::span<const Mask> sets) {
  // Distinct restricted sets, remembering one original index for each.
  std::vector<Mask> uniq;
  std::vector<int> origin;
  Mask reach = 0;
  for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
    Mask s = sets[i] & target;
    reach |= s;
    if (!s || std::find(uniq.begin(), uniq.end(), s) != uniq.end()) continue;
    uniq.push_back(s);
    origin.push_back(i);
  }
  if (!subset_of(target, reach)) return std::nullopt;
  for (int k = 0;; ++k) {
    std::vector<int> chosen;
    if (cover_dfs(target, uniq, k, chosen)) {
      for (int& c : chosen) c = origin[c];
      return chosen;
    }
  }
}

namespace {

// Covers `target` with ⋒-rows of the elements of `pool`; results are elements.
// An empty pool admits no choice at all, so nothing covers.
std::optional<std::vector<int>> cover_by_meets(const P0Set& b, Mask target, Mask pool) {
  if (!pool) return std::nullopt;
  std::vector<int> elems = bits_of(pool);
  std::vector<Mask> rows;
  for (int v : elems) rows.push_back(b.meets_row(v));
  auto c = min_cover(target, rows);
  if (!c) return std::nullopt;
  for (int& i : *c) i = elems[i];
  return c;
}

Mask preds_of(const P0Set& b, Mask ws) {
  Mask out = 0;
  for_each_bit(ws, [&](int w) { out |= b.pred(w); });
  return out;
}

}  // namespace

std::optional<std::vector<int>> phi_cover(const P0Set& b, int x, int y) {
  return cover_by_meets(b, b.pred(x) & b.nonzero(), preds_of(b, b.pred(y)));
}

bool phi_holds(const P0Set& b, int x, int y, int n) {
  if (!b.prec(x, y)) return false;
  auto c = phi_cover(b, x, y);
  return !c || static_cast<int>(c->size()) > n;
}

std::optional<std::vector<int>> psi_cover(const P0Set& b, int x, int y, int z) {
  Mask perp_x = 0;
  for (int w = 0; w < b.size(); ++w)
    if (b.perp(w, x)) perp_x |= bit(w);
  const Mask pool = preds_of(b, perp_x);
  std::optional<std::vector<int>> best;
  for_each_bit(b.pred(y), [&](int y2) {
    Mask target = b.pred(z) & b.nonzero() & ~b.meets_row(y2);
    auto c = cover_by_meets(b, target, pool);
    if (c && (!best || c->size() + 1 < best->size())) {
      c->insert(c->begin(), y2);
      best = std::move(c);
    }
  });
  return best;
}

bool psi_holds(const P0Set& b, int x, int y, int z, int n) {
  if (!b.prec(x, y)) return false;
  auto c = psi_cover(b, x, y, z);
  return !c || static_cast<int>(c->size()) - 1 > n;
}

bool theta_holds(const P0Set& b, int n, std::vector<int>* witness) {
  for (int x = 0; x < b.size(); ++x)
    for (int y = 0; y < b.size(); ++y) {
      if (b.prec(x, y)) continue;
      auto c = cover_by_meets(b, b.pred(x) & b.nonzero(), b.pred(y));
      if (c && static_cast<int>(c->size()) <= n) {
        if (witness) {
          *witness = {x, y};
          witness->insert(witness->end(), c->begin(), c->end());
        }
        return false;
      }
    }
  return true;
}

Report check_basic_semilattice(const P0Set& b) {
  const int n = b.size();
  const LatticeTables t = lattice_tables(b);
  const bool semi = t.antisymmetric && t.has_all_meets();
  Report r("basic_semilattice");

  Witness semi_w = t.antisymmetry_witness;
  if (t.antisymmetric)
    for (int x = 0; x < n && semi_w.empty(); ++x)
      for (int y = 0; y < n && semi_w.empty(); ++y)
        if (t.m(x, y) < 0) semi_w = {x, y};
  r.add("meet_semilattice", semi, semi_w);
  r.add("Minimum", true);
  r.add("Transitivity", true);

  FirstFailure coin;
  for (int x = 0; x < n; ++x)
    if (x != b.zero() && !b.meets(x, x)) coin({x});
  r.add("Coinitiality", !coin.found, coin.w);

  if (semi) {
    FirstFailure mult;
    for (int x = 0; x < n; ++x)
      for_each_bit(b.succ(x), [&](int x2) {
        for (int y = 0; y < n; ++y)
          for_each_bit(b.succ(y), [&](int y2) {
            if (!b.prec(t.m(x, y), t.m(x2, y2))) mult({x, x2, y, y2});
          });
      });
    r.add("Multiplicativity", !mult.found, mult.w);
  } else {
    r.not_applicable("Multiplicativity");
  }

  Witness th1, thn;
  r.add("theta_1", theta_holds(b, 1, &th1), th1);
  r.add("theta_n", theta_holds(b, type_bound(b), &thn), thn);

  FirstFailure phi, psi;
  for (int x = 0; x < n; ++x)
    for_each_bit(b.succ(x), [&](int y) {
      if (!phi_cover(b, x, y)) phi({x, y});
      for (int z = 0; z < n; ++z)
        if (!psi_cover(b, x, y, z)) psi({x, y, z});
    });
  r.add("phi_omitted", !phi.found, phi.w);
  r.add("psi_omitted", !psi.found, psi.w);
  return r;
}

}  // namespace stonework
