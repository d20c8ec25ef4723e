#include "stonework/lab.hpp"

#include <algorithm>
#include <random>

#include "stonework/axioms.hpp"
#include "stonework/error.hpp"
#include "stonework/spectrum.hpp"
#include "stonework/tight.hpp"

namespace stonework {

namespace {

P0Set from_up_rows(std::vector<Mask> up, std::vector<std::string> names) {
  return P0Set::from_rows(0, std::move(up), std::move(names));
}

std::string letter(int i) { return std::string(1, static_cast<char>('a' + i)); }

}  // namespace

std::vector<std::string> family_names() {
  return {"diamond", "powerset", "chain", "antichain", "vee", "witness"};
}

P0Set make_family(std::string_view name, int n) {
  if (name == "diamond") {
    if (n < 0 || n > kMaxElements - 2) fail(ErrorCode::CapExceeded, "diamond too large");
    const int top = n + 1;
    std::vector<Mask> up(n + 2);
    std::vector<std::string> names{"0"};
    up[0] = full_mask(n + 2);
    for (int i = 1; i <= n; ++i) {
      up[i] = bit(i) | bit(top);
      names.push_back(letter(i - 1));
    }
    up[top] = bit(top);
    names.push_back("1");
    return from_up_rows(std::move(up), std::move(names));
  }
  if (name == "powerset") {
    if (n < 0 || n > 4) fail(ErrorCode::CapExceeded, "powerset is limited to n <= 4");
    const int size = 1 << n;
    std::vector<Mask> up(size, 0);
    std::vector<std::string> names;
    for (int s = 0; s < size; ++s) {
      for (int t = 0; t < size; ++t)
        if ((s & ~t) == 0) up[s] |= bit(t);
      std::string nm = "{";
      for (int i = 0; i < n; ++i)
        if (s & (1 << i)) nm += (nm.size() > 1 ? "," : "") + std::to_string(i + 1);
      names.push_back(nm + "}");
    }
    return from_up_rows(std::move(up), std::move(names));
  }
  if (name == "chain") {
    if (n < 0 || n > kMaxElements - 1) fail(ErrorCode::CapExceeded, "chain too large");
    std::vector<Mask> up(n + 1);
    std::vector<std::string> names{"0"};
    for (int i = 0; i <= n; ++i) up[i] = full_mask(n + 1) & ~full_mask(i);
    for (int i = 0; i < n; ++i) names.push_back(letter(i));
    return from_up_rows(std::move(up), std::move(names));
  }
  if (name == "antichain") {
    if (n < 0 || n > kMaxElements - 1) fail(ErrorCode::CapExceeded, "antichain too large");
    std::vector<Mask> up(n + 1);
    std::vector<std::string> names{"0"};
    up[0] = full_mask(n + 1);
    for (int i = 1; i <= n; ++i) {
      up[i] = bit(i);
      names.push_back(letter(i - 1));
    }
    return from_up_rows(std::move(up), std::move(names));
  }
  if (name == "vee") {
    return from_up_rows({0b111, 0b010, 0b100}, {"0", "x", "y"});
  }
  if (name == "witness") {
    // 0 p q x y
    const std::vector<std::pair<int, int>> prec = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 1}, {2, 2},
                                                   {1, 3}, {2, 3}, {3, 4}, {1, 4}, {2, 4}};
    return P0Set::from_pairs(5, 0, prec, {"0", "p", "q", "x", "y"});
  }
  fail(ErrorCode::UnknownFamily, "unknown family '" + std::string(name) + "'");
}

P0Set random_p0set(int n, std::uint64_t seed, bool reflexive, double density) {
  require_cap(n, 12, "random_p0set");
  if (n < 1) fail(ErrorCode::Format, "a structure needs at least one element");
  std::mt19937_64 rng(seed);
  const double clamped = density < 0 ? 0 : (density > 1 ? 1 : density);
  const std::uint64_t threshold =
      clamped >= 1 ? ~std::uint64_t{0} : static_cast<std::uint64_t>(clamped * 18446744073709551616.0);
  auto coin = [&]() { return rng() < threshold; };

  std::vector<Mask> rows(n, 0);
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) {
      if (reflexive && y <= x) continue;
      if (coin()) rows[x] |= bit(y);
    }
  if (reflexive) {
    // Shuffle labels so the DAG's topological order is not always 1..n-1.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 1; --i) std::swap(perm[i], perm[1 + rng() % i]);
    std::vector<Mask> moved(n, 0);
    for (int x = 1; x < n; ++x) for_each_bit(rows[x], [&](int y) { moved[perm[x]] |= bit(perm[y]); });
    rows = std::move(moved);
    for (int x = 0; x < n; ++x) rows[x] |= bit(x);
  }
  // Warshall closure on row masks.
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      if (has(rows[x], k)) rows[x] |= rows[k];
  rows[0] = full_mask(n);
  return P0Set::from_rows(0, std::move(rows));
}

namespace {

struct Enumerator {
  int n;
  bool orders;
  std::vector<Mask> rows;
  const std::function<bool(const P0Set&)>& visit;
  std::int64_t count = 0;
  bool stop = false;

  // Transitivity among rows 0..k: y ∈ row x ⇒ row y ⊆ row x, and the new
  // row k must absorb rows it points at and be absorbed by rows pointing at it.
  bool consistent(int k) const {
    for (int x = 0; x <= k; ++x) {
      if (has(rows[x], k) && !subset_of(rows[k], rows[x])) return false;
      if (x < k && has(rows[k], x) && !subset_of(rows[x], rows[k])) return false;
    }
    return true;
  }

  bool closed() const {
    for (int x = 0; x < n; ++x) {
      bool ok = true;
      for_each_bit(rows[x], [&](int y) { ok = ok && subset_of(rows[y], rows[x]); });
      if (!ok) return false;
    }
    return true;
  }

  void run(int k) {
    if (stop) return;
    if (k == n) {
      if (!closed()) return;
      ++count;
      if (!visit(P0Set::from_rows(0, rows))) stop = true;
      return;
    }
    const Mask free = full_mask(n);
    for (Mask r = 0; r <= free; ++r) {
      if (orders) {
        if (!has(r, k) || has(r, 0)) continue;
        bool anti = true;
        for (int x = 1; x < k; ++x)
          if (has(r, x) && has(rows[x], k)) anti = false;
        if (!anti) continue;
      }
      rows[k] = r;
      if (consistent(k)) run(k + 1);
      if (stop) return;
    }
  }
};

}  // namespace

std::int64_t enumerate_structures(int n, bool reflexive_only, const std::function<bool(const P0Set&)>& visit) {
  require_cap(n, reflexive_only ? kMaxEnumerateOrders : kMaxEnumerate, "enumerate_structures");
  if (n < 1) return 0;
  Enumerator e{n, reflexive_only, std::vector<Mask>(n, 0), visit};
  e.rows[0] = full_mask(n);
  e.run(1);
  return e.count;
}

std::vector<P0Set> all_structures(int n, bool reflexive_only) {
  std::vector<P0Set> out;
  enumerate_structures(n, reflexive_only, [&](const P0Set& b) {
    out.push_back(b);
    return true;
  });
  return out;
}

namespace {

bool flag(const Report& r, std::string_view name) { return r.applicable(name) && r.holds(name); }

struct Suite {
  SuiteInfo info;
  // Enumerate partial orders rather than general transitive relations.
  bool orders;
  std::function<bool(const P0Set&)> holds;
  // Non-empty for suites that only inspect fixed candidates.
  std::function<std::vector<P0Set>()> candidates;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {{"separative_implies_rho_injective", "separative (B, ⪯) has an injective ρ"},
       true,
       [](const P0Set& b) {
         const Report r = separativity_chain(b);
         return !flag(r, "separative") || flag(r, "rho_injective");
       },
       {}},
      {{"rho_injective_implies_ssc", "an injective ρ forces section semicomplementation"},
       true,
       [](const P0Set& b) {
         const Report r = separativity_chain(b);
         return !flag(r, "rho_injective") || flag(r, "ssc");
       },
       {}},
      {{"separativity_chain", "separativity_chain passes (chain plus semilattice equivalence)"},
       true,
       [](const P0Set& b) { return separativity_chain(b).passed(); },
       {}},
      {{"rho_injective_implies_separative_on_meet_semilattices_converse_free",
        "on meet semilattices an injective ρ forces separativity"},
       true,
       [](const P0Set& b) {
         const Report r = separativity_chain(b);
         const Report p = order_predicates(b);
         return !flag(p, "meet_semilattice") || !flag(r, "rho_injective") || flag(r, "separative");
       },
       {}},
      {{"fgrho", "F ⪅ G exactly when ⋀ρ[F] ⊆ ⋁ρ[G]"},
       false,
       [](const P0Set& b) { return verify_fgrho(b).passed(); },
       {}},
      {{"basic_lattice_implies_basic_semilattice", "basic lattices pass the basic semilattice axioms"},
       false,
       [](const P0Set& b) { return !check_basic_lattice(b).passed() || check_basic_semilattice(b).passed(); },
       {}},
      {{"tight_characters_equal_maximal_centred", "tight characters are the maximal centred sets"},
       true,
       [](const P0Set& b) { return tight_characters(b).chars == maximal_centred_sets(b); },
       {}},
      {{"spectrum_vs_stone", "characters of B match ultrafilters of its enveloping algebra"},
       true,
       [](const P0Set& b) { return spectrum_vs_stone(b).passed(); },
       {}},
      {{"decomposition_holds_on_D3", "Decomposition on the diamond with three atoms (fails)"},
       false,
       [](const P0Set& b) { return flag(check_basic_lattice(b), "Decomposition"); },
       [] { return std::vector<P0Set>{make_family("diamond", 3)}; }},
  };
  return all;
}

// A property that cannot be evaluated on a structure (cap exceeded) is
// treated as holding there.
bool evaluates_true(const Suite& s, const P0Set& b) {
  try {
    return s.holds(b);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CapExceeded) return true;
    throw;
  }
}

}  // namespace

std::vector<SuiteInfo> search_suites() {
  std::vector<SuiteInfo> out;
  for (const Suite& s : suites()) out.push_back(s.info);
  return out;
}

std::optional<P0Set> search_counterexample(std::string_view suite, int bound, std::int64_t budget,
                                           std::uint64_t seed) {
  const auto& all = suites();
  const auto it = std::find_if(all.begin(), all.end(), [&](const Suite& s) { return s.info.name == suite; });
  if (it == all.end()) fail(ErrorCode::UnknownSuite, "unknown suite '" + std::string(suite) + "'");
  const Suite& s = *it;

  if (s.candidates) {
    std::int64_t checked = 0;
    for (const P0Set& b : s.candidates()) {
      if (checked++ >= budget) break;
      if (!evaluates_true(s, b)) return b;
    }
    return std::nullopt;
  }

  std::optional<P0Set> found;
  const int exhaustive = std::min(bound, 4);
  for (int n = 1; n <= exhaustive && !found; ++n)
    enumerate_structures(n, s.orders, [&](const P0Set& b) {
      if (evaluates_true(s, b)) return true;
      found = b;
      return false;
    });
  if (found || bound < 2) return found;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> density(0.1, 0.7);
  for (std::int64_t i = 0; i < budget; ++i) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(bound, 12) - 1));
    const double d = density(rng);
    const P0Set b = random_p0set(n, rng(), s.orders, d);
    if (!evaluates_true(s, b)) return b;
  }
  return std::nullopt;
}

}  // namespace stonework
