#include "stonework/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace stonework {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Format, std::string("invalid JSON: ") + e.what());
  }
}

void only_keys(const json& j, std::set<std::string> allowed, const char* what) {
  if (!j.is_object()) fail(ErrorCode::Format, std::string(what) + " must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key)) fail(ErrorCode::Format, std::string(what) + ": unknown key '" + key + "'");
}

const json& field(const json& j, const char* key, const char* what) {
  if (!j.contains(key)) fail(ErrorCode::Format, std::string(what) + ": missing key '" + key + "'");
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(ErrorCode::Format, std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) fail(ErrorCode::Format, std::string(what) + " out of range");
  return static_cast<int>(v);
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::Format, std::string(what) + " must be an array");
  std::vector<int> out;
  for (const json& e : j) out.push_back(as_int(e, what));
  return out;
}

std::vector<std::pair<int, int>> pair_list(const json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::Format, std::string(what) + " must be an array of pairs");
  std::vector<std::pair<int, int>> out;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2) fail(ErrorCode::Format, std::string(what) + " entries must be [x, y]");
    out.emplace_back(as_int(e[0], what), as_int(e[1], what));
  }
  return out;
}

Mask point_set(const json& j, int points, const char* what) {
  Mask m = 0;
  for (int p : int_list(j, what)) {
    if (p < 0 || p >= points) fail(ErrorCode::Format, std::string(what) + ": point out of range");
    m |= bit(p);
  }
  return m;
}

std::vector<Mask> set_list(const json& j, int points, const char* what) {
  if (!j.is_array()) fail(ErrorCode::Format, std::string(what) + " must be an array of sets");
  std::vector<Mask> out;
  for (const json& e : j) out.push_back(point_set(e, points, what));
  return out;
}

json mask_json(Mask m) {
  json a = json::array();
  for_each_bit(m, [&](int i) { a.push_back(i); });
  return a;
}

}  // namespace

P0Set parse_structure(std::string_view text) {
  const json j = parse_json(text);
  only_keys(j, {"size", "zero", "prec", "names"}, "structure");
  const int size = as_int(field(j, "size", "structure"), "size");
  if (size < 1) fail(ErrorCode::Format, "size must be positive");
  require_cap(size, kMaxLoadSize, "load_structure");
  const int zero = as_int(field(j, "zero", "structure"), "zero");
  const auto prec = pair_list(field(j, "prec", "structure"), "prec");
  std::vector<std::string> names;
  if (j.contains("names")) {
    const json& n = j.at("names");
    if (!n.is_array() || static_cast<int>(n.size()) != size)
      fail(ErrorCode::Format, "names must be an array with one string per element");
    for (const json& s : n) {
      if (!s.is_string()) fail(ErrorCode::Format, "names must be strings");
      names.push_back(s.get<std::string>());
    }
  }
  return P0Set::from_pairs(size, zero, prec, std::move(names), kMaxLoadSize);
}

std::string structure_to_json(const P0Set& b) {
  json j;
  j["size"] = b.size();
  j["zero"] = b.zero();
  json prec = json::array();
  for (const auto& [x, y] : b.pairs()) prec.push_back({x, y});
  j["prec"] = prec;
  if (!b.names().empty()) j["names"] = b.names();
  return j.dump(2) + "\n";
}

P0Set load_structure(const std::string& path) { return parse_structure(read_file(path)); }

FiniteTopology parse_topology(std::string_view text) {
  const json j = parse_json(text);
  only_keys(j, {"points", "opens", "basis"}, "topology");
  const int points = as_int(field(j, "points", "topology"), "points");
  if (points < 0) fail(ErrorCode::Format, "points must be non-negative");
  require_cap(points, kMaxElements, "load_topology");
  std::vector<Mask> basis = set_list(field(j, "basis", "topology"), points, "basis");
  FiniteTopology t = generated_topology(points, basis);
  if (j.contains("opens")) {
    std::vector<Mask> opens = set_list(j.at("opens"), points, "opens");
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    t.opens = std::move(opens);
  }
  validate_topology(t);
  return t;
}

std::string topology_to_json(const FiniteTopology& t) {
  json j;
  j["points"] = t.points;
  json opens = json::array(), basis = json::array();
  for (Mask o : t.opens) opens.push_back(mask_json(o));
  for (Mask o : t.basis) basis.push_back(mask_json(o));
  j["opens"] = opens;
  j["basis"] = basis;
  return j.dump(2) + "\n";
}

FiniteTopology load_topology(const std::string& path) { return parse_topology(read_file(path)); }

MapFile parse_map(std::string_view text, const std::string& base_dir) {
  const json j = parse_json(text);
  only_keys(j, {"from", "to", "pairs", "map"}, "map");
  MapFile m;
  auto path = [&](const char* key) -> std::optional<std::string> {
    if (!j.contains(key)) return std::nullopt;
    if (!j.at(key).is_string()) fail(ErrorCode::Format, std::string(key) + " must be a path string");
    const std::filesystem::path p(j.at(key).get<std::string>());
    return (p.is_absolute() ? p : std::filesystem::path(base_dir) / p).string();
  };
  m.from = path("from");
  m.to = path("to");
  if (j.contains("pairs")) m.pairs = pair_list(j.at("pairs"), "pairs");
  if (j.contains("map")) m.map = int_list(j.at("map"), "map");
  if (m.pairs.has_value() == m.map.has_value())
    fail(ErrorCode::Format, "a map file needs exactly one of 'pairs' and 'map'");
  if (m.pairs && (!m.from || !m.to)) fail(ErrorCode::Format, "'pairs' needs 'from' and 'to'");
  if (m.from.has_value() != m.to.has_value()) fail(ErrorCode::Format, "'from' and 'to' go together");
  return m;
}

MapFile load_map(const std::string& path) {
  const auto dir = std::filesystem::path(path).parent_path();
  return parse_map(read_file(path), dir.empty() ? "." : dir.string());
}

std::string report_to_json(const Report& r, int indent) {
  json a = json::array();
  for (const Verdict& v : r.verdicts()) {
    json e;
    e["axiom"] = v.property;
    e["holds"] = v.holds ? json(*v.holds) : json(nullptr);
    e["witness"] = v.witness.empty() ? json(nullptr) : json(v.witness);
    a.push_back(e);
  }
  return a.dump(indent);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Format, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::Format, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace stonework
