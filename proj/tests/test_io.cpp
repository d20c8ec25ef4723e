#include <doctest.h>

#include <filesystem>

#include "fixtures.hpp"
#include "stonework/io.hpp"
#include "stonework/stone.hpp"

using namespace stonework;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Format;
}

}  // namespace

TEST_CASE("structures round trip") {
  for (const P0Set& b : {fx::e0(), fx::c2(), fx::d3(), fx::w5(), fx::powerset(3)}) {
    const P0Set back = parse_structure(structure_to_json(b));
    CHECK(back == b);
    CHECK(back.names() == b.names());
  }
  const P0Set named = parse_structure(R"({"size": 2, "zero": 0, "prec": [[0,0],[0,1]], "names": ["bot", "a"]})");
  CHECK(named.name(1) == "a");
}

TEST_CASE("malformed structures are rejected") {
  CHECK(code_of([] { parse_structure("{"); }) == ErrorCode::Format);
  CHECK(code_of([] { parse_structure(R"({"size": 2, "zero": 0})"); }) == ErrorCode::Format);
  CHECK(code_of([] { parse_structure(R"({"size": 2, "zero": 0, "prec": [[0,1]], "extra": 1})"); }) ==
        ErrorCode::Format);
  CHECK(code_of([] { parse_structure(R"({"size": 2, "zero": 0, "prec": [[0,1],[0,5]]})"); }) != ErrorCode::NotGBA);
  CHECK(code_of([] { parse_structure(R"({"size": 2, "zero": 0, "prec": [[0,1],[0,"a"]]})"); }) ==
        ErrorCode::Format);
  CHECK(code_of([] { parse_structure(R"({"size": 3, "zero": 0, "prec": [[0,1],[1,2]]})"); }) ==
        ErrorCode::NotTransitive);
  CHECK(code_of([] { parse_structure(R"({"size": 2, "zero": 0, "prec": [[0,0]]})"); }) ==
        ErrorCode::MissingMinimum);
  CHECK(code_of([] { parse_structure(R"({"size": 99, "zero": 0, "prec": []})"); }) == ErrorCode::CapExceeded);
}

TEST_CASE("topologies round trip") {
  const FiniteTopology s = generated_topology(2, {0b10, 0b11});
  const FiniteTopology back = parse_topology(topology_to_json(s));
  CHECK(back.points == 2);
  CHECK(back.opens == s.opens);
  const FiniteTopology gen = parse_topology(R"({"points": 2, "basis": [[0], [1]]})");
  CHECK(gen.opens.size() == 4);
  CHECK(code_of([] { parse_topology(R"({"points": 2, "basis": [[2]]})"); }) == ErrorCode::Format);
}

TEST_CASE("map files") {
  const MapFile rel = parse_map(R"({"from": "a.json", "to": "b.json", "pairs": [[0, 0], [1, 2]]})", "dir");
  REQUIRE(rel.pairs);
  CHECK(rel.pairs->size() == 2);
  CHECK(std::filesystem::path(*rel.from) == std::filesystem::path("dir") / "a.json");
  const MapFile el = parse_map(R"({"map": [0, 1, 1]})");
  CHECK(el.map == std::vector<int>{0, 1, 1});
  CHECK_FALSE(el.from);
  CHECK(code_of([] { parse_map(R"({"map": [0], "bogus": 1})"); }) == ErrorCode::Format);
  CHECK(code_of([] { parse_map(R"({"pairs": [[0]]})"); }) == ErrorCode::Format);
}

TEST_CASE("files") {
  const std::string path = (std::filesystem::temp_directory_path() / "stonework_io_test.json").string();
  write_file(path, structure_to_json(fx::d3()));
  CHECK(load_structure(path) == fx::d3());
  std::filesystem::remove(path);
  CHECK(code_of([&] { read_file(path); }) == ErrorCode::Format);
}

TEST_CASE("reports as json") {
  Report r("demo");
  r.add("yes", true);
  r.add("no", false, {1, 2});
  r.not_applicable("skip");
  const std::string text = report_to_json(r, -1);
  CHECK(text.find(R"("witness":[1,2])") != std::string::npos);
  CHECK(text.find(R"("holds":null)") != std::string::npos);
  CHECK(text.find(R"("axiom":"yes","holds":true,"witness":null)") != std::string::npos);
}
