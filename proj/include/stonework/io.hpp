#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stonework/core.hpp"
#include "stonework/report.hpp"
#include "stonework/topology.hpp"

// JSON files. Every parse failure, unknown key or out-of-range index is
// reported as Error(Format) (or the validation error of the structure).
namespace stonework {

/// {"size", "zero", "prec": [[x, y], ...], "names"?}. Size ≤ kMaxLoadSize.
P0Set parse_structure(std::string_view text);
std::string structure_to_json(const P0Set& b);
P0Set load_structure(const std::string& path);

/// {"points", "opens"?, "basis"}; sets are arrays of point indices. Without
/// "opens" the topology generated by the basis is used.
FiniteTopology parse_topology(std::string_view text);
std::string topology_to_json(const FiniteTopology& t);
FiniteTopology load_topology(const std::string& path);

/// {"from": path, "to": path, "pairs": [[x, y], ...]} for relations,
/// {"from", "to", "map": [...]} for element maps, {"map": [...]} for point
/// maps. Paths are resolved against the map file's directory.
struct MapFile {
  std::optional<std::string> from, to;
  std::optional<std::vector<std::pair<int, int>>> pairs;
  std::optional<std::vector<int>> map;
};
MapFile parse_map(std::string_view text, const std::string& base_dir = ".");
MapFile load_map(const std::string& path);

/// [{"axiom", "holds", "witness"}, ...]; n/a holds and empty witnesses are null.
std::string report_to_json(const Report& r, int indent = 2);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace stonework
