// stonework: command-line front end over the library.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "stonework/axioms.hpp"
#include "stonework/criteria.hpp"
#include "stonework/io.hpp"
#include "stonework/lab.hpp"
#include "stonework/morphisms.hpp"
#include "stonework/saturation.hpp"
#include "stonework/spectrum.hpp"
#include "stonework/stone.hpp"
#include "stonework/tight.hpp"

namespace {

using nlohmann::json;
using namespace stonework;

constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

// Collects reports and facts, then prints them as text or one JSON object.
class Output {
 public:
  explicit Output(bool as_json) : json_(as_json) {}

  void fact(const std::string& key, const json& value) {
    doc_[key] = value;
    if (!json_) std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }

  /// `checked` reports count towards the exit code; others only classify.
  void report(const Report& r, const P0Set* b, bool checked) {
    doc_["reports"][r.name()] = json::parse(report_to_json(r));
    if (!json_) std::cout << to_text(r, b ? &b->names() : nullptr) << "\n";
    if (checked && !r.passed()) failed_ = true;
  }

  void fail() { failed_ = true; }

  int finish() const {
    if (json_) std::cout << doc_.dump(2) << "\n";
    return failed_ ? kExitFailed : 0;
  }

 private:
  bool json_;
  bool failed_ = false;
  json doc_ = json::object();
};

json mask_names(const P0Set& b, Mask m) { return b.format_mask(m); }

P0Set load_checked(const std::string& path, int max_size) {
  P0Set b = load_structure(path);
  if (b.size() > max_size)
    fail(ErrorCode::CapExceeded, "structure has " + std::to_string(b.size()) + " elements; --max-size is " +
                                     std::to_string(max_size));
  return b;
}

// Classification reports never fail the command.
void run_check(Output& out, const P0Set& b) {
  out.fact("size", b.size());
  out.report(check_basic_lattice(b), &b, false);
  out.report(check_basic_semilattice(b), &b, false);
  out.report(order_predicates(b), &b, false);
  out.report(auxiliarity_report(b), &b, false);
}

void run_stone(Output& out, const P0Set& b, const std::optional<std::string>& map_path, int max_size) {
  const StoneSpace s = stone_space(b);
  json points = json::array();
  for (Mask u : s.points) points.push_back(mask_names(b, u));
  out.fact("ultrafilters", points);
  if (check_basic_lattice(b).passed())
    out.report(verify_duality(b), &b, true);
  else
    out.fact("duality", "not a basic lattice; duality checks skipped");
  if (!map_path) return;
  const MapFile m = load_map(*map_path);
  if (!m.pairs) fail(ErrorCode::Format, "stone --map expects a relation file with 'pairs'");
  const P0Set from = load_checked(*m.from, max_size);
  const P0Set to = load_checked(*m.to, max_size);
  Interpolator r{from, to, std::vector<Mask>(from.size(), 0)};
  for (const auto& [x, y] : *m.pairs) {
    if (x < 0 || x >= from.size() || y < 0 || y >= to.size())
      fail(ErrorCode::IndexOutOfRange, "relation pair outside the structures", {x, y});
    r.rel[x] |= bit(y);
  }
  const Report ir = is_interpolator(r);
  out.report(ir, nullptr, true);
  if (!ir.passed()) return;
  if (ir.holds("zero_reflecting"))
    out.report(induced_stone_map(r).report, nullptr, true);
  else
    out.fact("stone_map", "relation sends a nonzero element to 0; no induced map");
}

void run_spectrum(Output& out, const P0Set& b) {
  const CharacterSet chars = tight_characters(b);
  json list = json::array();
  for (Mask u : chars.chars) list.push_back(mask_names(b, u));
  out.fact("characters", list);
  if (b.size() <= 12) {
    json centred = json::array();
    for (Mask c : maximal_centred_sets(b)) centred.push_back(mask_names(b, c));
    out.fact("maximal_centred", centred);
  }
  if (b.size() <= 10) out.report(verify_pseudochar(b), &b, true);
  out.report(separativity_chain(b), &b, true);
  if (b.size() <= 8) out.report(spectrum_vs_stone(b), &b, true);
}

bool degenerate(const P0Set& x) { return (x.reflexive_view().down(x.zero()) & x.nonzero()) != 0; }

void run_envelope(Output& out, const P0Set& b, const std::optional<std::string>& map_path, int max_size) {
  const RegularOpenAlgebra s = enveloping_algebra(b);
  json elements = json::array(), rhos = json::array();
  for (Mask e : s.elements) elements.push_back(mask_names(b, e));
  for (int x = 0; x < b.size(); ++x) rhos.push_back(s.rho[x]);
  out.fact("elements", elements);
  out.fact("rho", rhos);
  if (b.size() <= kMaxSubsetCarrier) out.report(verify_fgrho(b), &b, true);
  if (b.size() <= 6 && !degenerate(b))
    out.report(verify_alexandroff_maps(b), &b, true);
  if (!map_path) return;

  const MapFile m = load_map(*map_path);
  if (!m.map || !m.to) fail(ErrorCode::Format, "envelope --map expects {\"from\", \"to\", \"map\"}");
  const P0Set from = load_checked(*m.from, max_size);
  if (!(from == b)) fail(ErrorCode::Format, "the map's source differs from the structure argument");
  const StructMap beta = make_map(b, load_checked(*m.to, max_size), *m.map);
  const Report props = map_properties(beta);
  out.report(props, &b, false);
  out.report(verify_tight_equivalences(beta), &b, true);
  if (!props.holds("tightish")) {
    out.fact("universality", "map is not tightish; no factorization");
    return;
  }
  if (degenerate(b) || degenerate(beta.target)) {
    out.fact("universality", "a nonzero element lies below zero; no factorization");
    return;
  }
  if (props.holds("representation")) {
    const TightFactor f = factor_tight(beta);
    json pi = json::array();
    for (int v : f.pi.assignment) pi.push_back(v);
    out.fact("pi", pi);
    out.report(f.report, nullptr, true);
  }
  out.report(naturality_square(beta), nullptr, true);
}

void run_saturate(Output& out, const P0Set& b) {
  const SaturatedFamily fam = saturated_family(b, Generators::All);
  json sets = json::array();
  for (Mask m : fam.sets) sets.push_back(mask_names(b, m));
  out.fact("saturated_sets", sets);
  out.report(frame_report(b), &b, false);
  if (check_basic_semilattice(b).passed()) out.report(verify_frame(b), &b, true);
  out.report(precprops_laws(b), &b, true);
  out.report(wayb_laws(b), &b, true);
  out.report(saturation_laws(b), &b, true);
}

int run_verify(Output& out, const std::string& which) {
  std::vector<int> ids;
  if (which == "all") {
    for (const CriterionInfo& c : criteria()) ids.push_back(c.id);
  } else {
    try {
      ids.push_back(std::stoi(which));
    } catch (const std::exception&) {
      fail(ErrorCode::UnknownSuite, "criterion must be a number or 'all'");
    }
  }
  json results = json::array();
  for (int id : ids) {
    const CriterionResult r = run_criterion(id);
    results.push_back({{"id", id},
                       {"name", r.info.name},
                       {"passed", r.passed()},
                       {"seconds", r.seconds},
                       {"limit", r.info.limit_seconds},
                       {"detail", r.detail}});
    if (!r.passed()) out.fail();
  }
  out.fact("criteria", results);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Stone duality, tight spectra and saturation checks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::uint64_t seed = 0;
  int max_size = kMaxLoadSize;
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "seed for randomized work (default 0)");
  app.add_option("--max-size", max_size, "largest structure accepted (default 24)");

  std::string input;
  std::optional<std::string> map_path;
  auto* check = app.add_subcommand("check", "axiom, semilattice and order reports");
  check->add_option("structure", input)->required();
  auto* stone = app.add_subcommand("stone", "Stone space and duality checks");
  stone->add_option("structure", input)->required();
  stone->add_option("--map", map_path, "interpolator file to check and push to the Stone spaces");
  auto* spectrum = app.add_subcommand("spectrum", "tight characters and pseudobasis checks");
  spectrum->add_option("structure", input)->required();
  auto* envelope = app.add_subcommand("envelope", "enveloping algebra, FGrho and universality");
  envelope->add_option("structure", input)->required();
  envelope->add_option("--map", map_path, "element map to classify and factor");
  auto* saturate = app.add_subcommand("saturate", "saturated sets and frame checks");
  saturate->add_option("structure", input)->required();

  std::string which = "all";
  auto* verify = app.add_subcommand("verify", "run acceptance criteria");
  verify->add_option("criterion", which, "criterion number or 'all'");

  std::string family;
  int n = 0;
  double density = 0.3;
  bool reflexive = false;
  std::optional<std::string> out_path;
  auto* gen = app.add_subcommand("gen", "emit a named family or a random structure");
  gen->add_option("family", family, "family name or 'random'")->required();
  gen->add_option("-n", n, "size parameter");
  gen->add_option("--density", density, "edge probability for random structures");
  gen->add_flag("--reflexive", reflexive, "random partial order instead of a transitive relation");
  gen->add_option("-o,--output", out_path, "write to a file instead of stdout");

  std::string suite;
  int bound = 5;
  std::int64_t budget = 10000;
  bool list = false;
  auto* search = app.add_subcommand("search", "counterexample search over a named property");
  search->add_option("suite", suite);
  search->add_option("--bound", bound, "largest structure size");
  search->add_option("--budget", budget, "number of random structures");
  search->add_flag("--list", list, "list the suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  Output out(format == "json");
  try {
    if (*check) run_check(out, load_checked(input, max_size));
    if (*stone) run_stone(out, load_checked(input, max_size), map_path, max_size);
    if (*spectrum) run_spectrum(out, load_checked(input, max_size));
    if (*envelope) run_envelope(out, load_checked(input, max_size), map_path, max_size);
    if (*saturate) run_saturate(out, load_checked(input, max_size));
    if (*verify) run_verify(out, which);
    if (*gen) {
      const P0Set b = family == "random" ? random_p0set(n, seed, reflexive, density) : make_family(family, n);
      const std::string text = structure_to_json(b);
      if (out_path)
        write_file(*out_path, text);
      else
        std::cout << text;
      return 0;
    }
    if (*search) {
      if (list) {
        for (const SuiteInfo& s : search_suites()) std::cout << s.name << "  " << s.description << "\n";
        return 0;
      }
      if (suite.empty()) fail(ErrorCode::UnknownSuite, "name a suite or pass --list");
      const auto found = search_counterexample(suite, bound, budget, seed);
      out.fact("suite", suite);
      if (found) {
        out.fact("counterexample", json::parse(structure_to_json(*found)));
        out.fail();
      } else {
        out.fact("counterexample", nullptr);
      }
    }
  } catch (const Error& e) {
    std::cerr << "stonework: " << e.what() << "\n";
    return kExitInput;
  }
  return out.finish();
}
