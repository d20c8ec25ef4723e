#include "stonework/saturation.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>

#include "stonework/axioms.hpp"
#include "stonework/kernels.hpp"

namespace stonework {

SubsetCalculus::SubsetCalculus(const P0Set& b) : b_(b), zero_bit_(bit(b.zero())) {
  const int n = b.size();
  require_cap(n, kMaxSubsetCarrier, "subset tables");
  const std::size_t count = std::size_t{1} << n;
  std::vector<Mask> pred, meets, down;
  for (int x = 0; x < n; ++x) {
    pred.push_back(b.pred(x));
    meets.push_back(b.meets_row(x));
    down.push_back(b.down(x));
  }
  below_.resize(count);
  meeting_.resize(count);
  lower_.resize(count);
  kernels::subset_fold_or(pred, 0, below_);
  kernels::subset_fold_or(meets, 0, meeting_);
  kernels::subset_fold_or(down, 0, lower_);
  sat_.resize(count);
  for (std::size_t a = 0; a < count; ++a) {
    const Mask allowed = meeting_[below_[a]] | zero_bit_;
    Mask s = 0;
    for (int y = 0; y < n; ++y)
      if (subset_of(pred[y], allowed)) s |= bit(y);
    sat_[a] = s;
  }
  const LatticeTables t = lattice_tables(b);
  meet_ = t.meet;
  if (!t.antisymmetric) std::fill(meet_.begin(), meet_.end(), -1);
}

std::optional<Mask> SubsetCalculus::wedge(Mask c, Mask d) const {
  const int n = b_.size();
  Mask out = 0;
  bool ok = true;
  for_each_bit(c, [&](int x) {
    for_each_bit(d, [&](int y) {
      const int m = meet_[x * n + y];
      if (m < 0) ok = false;
      else out |= bit(m);
    });
  });
  if (!ok) return std::nullopt;
  return out;
}

SubsetRelations subset_relations(const P0Set& b, Mask c, Mask d) {
  const SubsetCalculus s(b);
  return {s.prec(c, d), s.precsim(c, d), s.wayb(c, d)};
}

SubsetRelations subset_relations_exhaustive(const P0Set& b, Mask c, Mask d) {
  const SubsetCalculus s(b);
  bool wb = false;
  for (int f = 0; f < s.subsets() && !wb; ++f)
    wb = s.precsim(c, static_cast<Mask>(f)) && s.prec(static_cast<Mask>(f), d);
  return {s.prec(c, d), s.precsim(c, d), wb};
}

Mask saturate(const P0Set& b, Mask a) { return SubsetCalculus(b).saturate(a); }

int SaturatedFamily::index_of(Mask s) const {
  auto it = std::find(sets.begin(), sets.end(), s);
  return it == sets.end() ? -1 : static_cast<int>(it - sets.begin());
}

namespace {

bool size_order(Mask a, Mask b) {
  return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
}

SaturatedFamily build_family(const SubsetCalculus& s, std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end(), size_order);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  SaturatedFamily f{s.base(), std::move(sets), {}, {}};
  const int k = f.size();
  f.join.assign(k * k, -1);
  f.meet.assign(k * k, -1);
  for (int a = 0; a < k; ++a)
    for (int c = 0; c < k; ++c) {
      f.join[a * k + c] = f.index_of(s.saturate(f.sets[a] | f.sets[c]));
      f.meet[a * k + c] = f.index_of(f.sets[a] & f.sets[c]);
    }
  return f;
}

SaturatedFamily family_from(const SubsetCalculus& s, Generators g) {
  const P0Set& b = s.base();
  std::vector<Mask> sets;
  switch (g) {
    case Generators::Singletons:
      for (int x = 0; x < b.size(); ++x) sets.push_back(s.saturate(bit(x)));
      break;
    case Generators::All:
      for (int a = 0; a < s.subsets(); ++a) sets.push_back(s.saturate(static_cast<Mask>(a)));
      break;
    case Generators::Finite: {
      sets.push_back(s.saturate(0));
      for (int x = 0; x < b.size(); ++x) sets.push_back(s.saturate(bit(x)));
      for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
          const Mask u = s.saturate(sets[i] | sets[j]);
          if (std::find(sets.begin(), sets.end(), u) == sets.end()) sets.push_back(u);
        }
      break;
    }
  }
  return build_family(s, std::move(sets));
}

// Least member containing `need`. Index order refines ⊆, so it can only be
// the first candidate.
int least_upper(const SaturatedFamily& f, Mask need) {
  int best = -1;
  for (int i = 0; i < f.size(); ++i) {
    if (!subset_of(need, f.sets[i])) continue;
    if (best < 0) best = i;
    else if (!subset_of(f.sets[best], f.sets[i])) return -1;
  }
  return best;
}

int greatest_lower(const SaturatedFamily& f, Mask inside) {
  int best = -1;
  for (int i = 0; i < f.size(); ++i)
    if (subset_of(f.sets[i], inside)) best = i;
  if (best < 0) return -1;
  for (int i = 0; i < f.size(); ++i)
    if (subset_of(f.sets[i], inside) && !subset_of(f.sets[i], f.sets[best])) return -1;
  return best;
}

std::vector<int> masks(std::initializer_list<Mask> ms) {
  std::vector<int> out;
  for (Mask m : ms) out.push_back(static_cast<int>(m));
  return out;
}

}  // namespace

SaturatedFamily saturated_family(const P0Set& b, Generators g) {
  require_cap(b.size(), 10, "saturated_family");
  return family_from(SubsetCalculus(b), g);
}

Report frame_report(const P0Set& b) {
  require_cap(b.size(), 8, "frame verification");
  const SubsetCalculus s(b);
  const SaturatedFamily all = family_from(s, Generators::All);
  const SaturatedFamily fin = family_from(s, Generators::Finite);
  const SaturatedFamily single = family_from(s, Generators::Singletons);
  const int k = all.size();
  const int subsets = s.subsets();
  Report r("frame");

  r.add("families_agree", all.sets == fin.sets, {all.size(), fin.size()});

  std::vector<int> lub(k * k), glb(k * k);
  for (int a = 0; a < k; ++a)
    for (int c = 0; c < k; ++c) {
      lub[a * k + c] = least_upper(all, all.sets[a] | all.sets[c]);
      glb[a * k + c] = greatest_lower(all, all.sets[a] & all.sets[c]);
    }
  std::vector<int> sat_index(subsets);
  for (int a = 0; a < subsets; ++a) sat_index[a] = all.index_of(s.saturate(static_cast<Mask>(a)));

  std::vector<int> sup_w;
  if (least_upper(all, 0) != sat_index[0]) sup_w = {0};
  for (int a = 0; a < subsets && sup_w.empty(); ++a)
    for (int c = a; c < subsets && sup_w.empty(); ++c) {
      const int l = lub[sat_index[a] * k + sat_index[c]];
      if (l < 0 || all.sets[l] != s.saturate(static_cast<Mask>(a | c))) sup_w = {a, c};
    }
  r.add("supP", sup_w.empty(), sup_w);

  if (lattice_tables(b).has_all_meets() && b.is_antisymmetric()) {
    std::vector<int> cap_w;
    for (int a = 0; a < subsets && cap_w.empty(); ++a)
      for (int c = a; c < subsets && cap_w.empty(); ++c) {
        const Mask sa = s.saturate(a), sc = s.saturate(c);
        const int g = glb[sat_index[a] * k + sat_index[c]];
        const Mask w = *s.wedge(a, c);
        if (g < 0 || all.sets[g] != s.saturate(w) || s.saturate(w) != (sa & sc)) cap_w = {a, c};
      }
    r.add("CcapD", cap_w.empty(), cap_w);
  } else {
    r.not_applicable("CcapD");
  }

  std::vector<int> dist_w;
  for (int a = 0; a < k && dist_w.empty(); ++a)
    for (int c = 0; c < k && dist_w.empty(); ++c)
      for (int d = 0; d < k && dist_w.empty(); ++d) {
        const int cd = lub[c * k + d];
        const int ac = glb[a * k + c], ad = glb[a * k + d];
        const int lhs = cd < 0 ? -1 : glb[a * k + cd];
        const int rhs = ac < 0 || ad < 0 ? -1 : lub[ac * k + ad];
        if (lhs < 0 || lhs != rhs) dist_w = {a, c, d};
      }
  r.add("distributive", dist_w.empty(), dist_w);

  // S ≪ T literally: every directed subfamily whose join contains T has a
  // member containing S. Above 16 members use that finite directed families
  // contain their join, which reduces ≪ to ⊆.
  std::vector<char> wb(k * k, 0);  // wb[s * k + t]: S ≪ T
  if (k <= 16) {
    std::vector<Mask> ub(k * k, 0);  // members containing both
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        for (int u = 0; u < k; ++u)
          if (subset_of(all.sets[i] | all.sets[j], all.sets[u])) ub[i * k + j] |= bit(u);
    std::fill(wb.begin(), wb.end(), 1);
    for (std::uint32_t z = 1; z < (std::uint32_t{1} << k); ++z) {
      bool directed = true;
      for_each_bit(z, [&](int i) {
        for_each_bit(z, [&](int j) { directed = directed && (ub[i * k + j] & z); });
      });
      if (!directed) continue;
      Mask un = 0;
      for_each_bit(z, [&](int i) { un |= all.sets[i]; });
      const int join = least_upper(all, un);
      if (join < 0) continue;
      for (int si = 0; si < k; ++si) {
        bool covered = false;
        for_each_bit(z, [&](int i) { covered = covered || subset_of(all.sets[si], all.sets[i]); });
        if (covered) continue;
        for (int t = 0; t < k; ++t)
          if (subset_of(all.sets[t], all.sets[join])) wb[si * k + t] = 0;
      }
    }
  } else {
    for (int si = 0; si < k; ++si)
      for (int t = 0; t < k; ++t) wb[si * k + t] = subset_of(all.sets[si], all.sets[t]);
  }
  std::vector<int> wb_w, cont_w;
  for (int si = 0; si < k && wb_w.empty(); ++si)
    for (int t = 0; t < k && wb_w.empty(); ++t)
      if (static_cast<bool>(wb[si * k + t]) != s.wayb(all.sets[si], all.sets[t]))
        wb_w = masks({all.sets[si], all.sets[t]});
  r.add("way_below", wb_w.empty(), wb_w);
  for (int t = 0; t < k && cont_w.empty(); ++t) {
    Mask un = 0;
    for (int si = 0; si < k; ++si)
      if (wb[si * k + t]) un |= all.sets[si];
    if (least_upper(all, un) != t) cont_w = masks({all.sets[t]});
  }
  r.add("continuous", cont_w.empty(), cont_w);

  std::vector<int> iso_w;
  for (int x = 0; x < b.size() && iso_w.empty(); ++x)
    for (int y = 0; y < b.size() && iso_w.empty(); ++y) {
      const Mask sx = s.saturate(bit(x)), sy = s.saturate(bit(y));
      if (b.prec(x, y) != s.wayb(sx, sy) || (x != y && sx == sy)) iso_w = {x, y};
    }
  r.add("ISO", iso_w.empty(), iso_w);

  if (fin.size() > kMaxElements) fail(ErrorCode::CapExceeded, "finite saturated family exceeds 32 members");
  std::vector<Mask> rows(fin.size(), 0);
  for (int a = 0; a < fin.size(); ++a)
    for (int c = 0; c < fin.size(); ++c)
      if (s.wayb(fin.sets[a], fin.sets[c])) rows[a] |= bit(c);
  const P0Set lifted = P0Set::from_rows(fin.index_of(s.saturate(0)), std::move(rows));
  const Report fbl = check_basic_lattice(lifted);
  const Verdict* bad = fbl.first_failure();
  r.add("FBL", fbl.passed(), bad ? bad->witness : std::vector<int>{});

  std::vector<int> dense_w;
  for (int i = 0; i < fin.size() && dense_w.empty(); ++i) {
    Mask un = 0;
    for (Mask sx : single.sets)
      if (subset_of(sx, fin.sets[i])) un |= sx;
    if (s.saturate(un) != fin.sets[i]) dense_w = masks({fin.sets[i]});
  }
  r.add("singleton_density", dense_w.empty(), dense_w);
  return r;
}

Report verify_frame(const P0Set& b) {
  const Report semi = check_basic_semilattice(b);
  if (!semi.passed()) {
    const Verdict* v = semi.first_failure();
    fail(ErrorCode::PreconditionFailed, "frame verification needs a basic semilattice (fails " + v->property + ")",
         v->witness);
  }
  return frame_report(b);
}

namespace {

using Tuple = std::array<Mask, 4>;

// Calls holds(t) on tuples of `arity` subsets; returns the first failing one.
template <class F>
std::optional<std::vector<int>> sweep(int n, int arity, const LawSweep& cfg, std::uint64_t salt, F&& holds) {
  const std::uint64_t per = std::uint64_t{1} << n;
  std::uint64_t total = 1;
  bool small = true;
  for (int i = 0; i < arity; ++i) {
    if (total > static_cast<std::uint64_t>(cfg.exhaustive_limit) / per + 1) small = false;
    total *= per;
  }
  small = small && total <= static_cast<std::uint64_t>(cfg.exhaustive_limit);
  Tuple t{};
  auto report = [&]() {
    std::vector<int> w;
    for (int i = 0; i < arity; ++i) w.push_back(static_cast<int>(t[i]));
    return w;
  };
  if (small) {
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (int i = 0; i < arity; ++i) {
        t[i] = static_cast<Mask>(c % per);
        c /= per;
      }
      if (!holds(t)) return report();
    }
  } else {
    std::mt19937_64 rng(cfg.seed * 0x9E3779B97F4A7C15ULL + salt);
    for (std::int64_t k = 0; k < cfg.samples; ++k) {
      for (int i = 0; i < arity; ++i) t[i] = static_cast<Mask>(rng() & (per - 1));
      if (!holds(t)) return report();
    }
  }
  return std::nullopt;
}

struct Clause {
  const char* name;
  int arity;
  bool needs_coinitial;
  bool needs_meets;
  std::function<bool(const Tuple&)> holds;
};

Report run_clauses(const char* title, const P0Set& b, const LawSweep& cfg, const std::vector<Clause>& clauses) {
  bool coinitial = true;
  for_each_bit(b.nonzero(), [&](int x) { coinitial = coinitial && b.meets(x, x); });
  const bool meets = b.is_antisymmetric() && lattice_tables(b).has_all_meets();
  Report r(title);
  std::uint64_t salt = 0;
  for (const Clause& c : clauses) {
    ++salt;
    if ((c.needs_coinitial && !coinitial) || (c.needs_meets && !meets)) {
      r.not_applicable(c.name);
      continue;
    }
    const auto bad = sweep(b.size(), c.arity, cfg, salt, c.holds);
    r.add(c.name, !bad, bad.value_or(std::vector<int>{}));
  }
  return r;
}

}  // namespace

Report precprops_laws(const P0Set& b, const LawSweep& cfg) {
  const SubsetCalculus s(b);
  const std::vector<Clause> clauses = {
      {"prec_transitive", 3, false, false,
       [&](const Tuple& t) { return !(s.prec(t[0], t[1]) && s.prec(t[1], t[2])) || s.prec(t[0], t[2]); }},
      {"precsim_transitive", 3, true, false,
       [&](const Tuple& t) { return !(s.precsim(t[0], t[1]) && s.precsim(t[1], t[2])) || s.precsim(t[0], t[2]); }},
      {"prec_union_additive", 4, false, false,
       [&](const Tuple& t) {
         return !(s.prec(t[0], t[1]) && s.prec(t[2], t[3])) || s.prec(t[0] | t[2], t[1] | t[3]);
       }},
      {"precsim_union_additive", 4, false, false,
       [&](const Tuple& t) {
         return !(s.precsim(t[0], t[1]) && s.precsim(t[2], t[3])) || s.precsim(t[0] | t[2], t[1] | t[3]);
       }},
      {"prec_meet_multiplicative", 4, true, true,
       [&](const Tuple& t) {
         return !(s.prec(t[0], t[1]) && s.prec(t[2], t[3])) ||
                s.prec(*s.wedge(t[0], t[2]), *s.wedge(t[1], t[3]));
       }},
      {"precsim_meet_multiplicative", 4, true, true,
       [&](const Tuple& t) {
         return !(s.precsim(t[0], t[1]) && s.precsim(t[2], t[3])) ||
                s.precsim(*s.wedge(t[0], t[2]), *s.wedge(t[1], t[3]));
       }},
      {"preceq_implies_precsim", 2, true, false,
       [&](const Tuple& t) { return !subset_of(t[0], s.lower(t[1])) || s.precsim(t[0], t[1]); }},
      {"precsim_iff_preceqsim", 2, true, false,
       [&](const Tuple& t) { return s.precsim(t[0], t[1]) == s.preceqsim(t[0], t[1]); }},
  };
  return run_clauses("precprops", b, cfg, clauses);
}

Report wayb_laws(const P0Set& b, const LawSweep& cfg) {
  const SubsetCalculus s(b);
  const std::vector<Clause> clauses = {
      {"wayb_transitive", 3, true, false,
       [&](const Tuple& t) { return !(s.wayb(t[0], t[1]) && s.wayb(t[1], t[2])) || s.wayb(t[0], t[2]); }},
      {"wayb_union_additive", 4, true, false,
       [&](const Tuple& t) {
         return !(s.wayb(t[0], t[1]) && s.wayb(t[2], t[3])) || s.wayb(t[0] | t[2], t[1] | t[3]);
       }},
      {"wayb_meet_multiplicative", 4, true, true,
       [&](const Tuple& t) {
         return !(s.wayb(t[0], t[1]) && s.wayb(t[2], t[3])) ||
                s.wayb(*s.wedge(t[0], t[2]), *s.wedge(t[1], t[3]));
       }},
      {"prec_implies_wayb", 2, true, false,
       [&](const Tuple& t) { return !s.prec(t[0], t[1]) || s.wayb(t[0], t[1]); }},
      {"wayb_interpolates", 2, true, false,
       [&](const Tuple& t) {
         bool through = false;
         for (int g = 0; g < s.subsets() && !through; ++g)
           through = s.wayb(t[0], static_cast<Mask>(g)) && s.prec(static_cast<Mask>(g), t[1]);
         return through == s.wayb(t[0], t[1]);
       }},
      {"precsim_wayb_absorbs", 3, true, false,
       [&](const Tuple& t) {
         const bool first = !(s.precsim(t[0], t[1]) && s.wayb(t[1], t[2])) || s.wayb(t[0], t[2]);
         return first && (!s.wayb(t[0], t[2]) || s.precsim(t[0], t[2]));
       }},
  };
  return run_clauses("wayb", b, cfg, clauses);
}

Report saturation_laws(const P0Set& b, const LawSweep& cfg) {
  const SubsetCalculus s(b);
  const std::vector<Clause> clauses = {
      {"subset_of_saturation_iff_wayb", 2, true, false,
       [&](const Tuple& t) { return subset_of(t[0], s.saturate(t[1])) == s.wayb(t[0], t[1]); }},
      {"wayb_saturation_invariant", 2, true, false,
       [&](const Tuple& t) {
         const bool mid = s.wayb(t[0], t[1]);
         return s.wayb(t[0], s.saturate(t[1])) == mid && s.wayb(s.saturate(t[0]), t[1]) == mid;
       }},
      {"saturation_chain", 1, true, false,
       [&](const Tuple& t) {
         const Mask a = t[0], sa = s.saturate(a);
         Mask finite_union = 0;
         for (Mask g = a;; g = (g - 1) & a) {
           finite_union |= s.saturate(g);
           if (!g) break;
         }
         return subset_of(s.below(a), sa) && s.lower(sa) == sa && s.saturate(s.lower(a)) == sa &&
                s.saturate(s.below(a)) == sa && s.saturate(sa) == sa && finite_union == sa &&
                s.precsim(sa, a);
       }},
      {"saturation_monotone", 2, false, false,
       [&](const Tuple& t) {
         return !subset_of(t[0], t[1]) || subset_of(s.saturate(t[0]), s.saturate(t[1]));
       }},
  };
  return run_clauses("saturation", b, cfg, clauses);
}

}  // namespace stonework
