#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latmod/cli.hpp"
#include "latmod/constructions.hpp"
#include "latmod/io.hpp"

#include "json.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

using namespace latmod;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / "latmod_io_test";
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

// Runs the CLI with stdout captured.
std::pair<int, std::string> run_cli(const std::vector<std::string>& args) {
  std::ostringstream captured;
  std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
  int code = cli_dispatch(args);
  std::cout.rdbuf(old);
  return {code, captured.str()};
}

}  // namespace

TEST_CASE("parsing lattice files") {
  Lattice c = parse_lattice_file(R"({"size":3,"covers":[[0,1],[1,2]]})");
  CHECK(canonical_form(c) == canonical_form(chain_lattice(2)));

  Lattice fig = parse_lattice_file(
      R"({"size":7,"covers":[[0,1],[1,2],[2,3],[3,4],[0,5],[5,6],[6,4]]})");
  CHECK(canonical_form(fig) == canonical_form(parallel_chains(3, 2)));

  CHECK_THROWS_AS(parse_lattice_file(R"({"size":2,"covers":[]})"),
                  not_a_lattice_error);
  CHECK_THROWS_AS(parse_lattice_file("{"), io_error);
  CHECK_THROWS_AS(parse_lattice_file(R"({"covers":[]})"), io_error);
  CHECK_THROWS_AS(parse_lattice_file(R"({"size":2,"covers":[[0]]})"), io_error);
  CHECK_THROWS_AS(parse_lattice_file(R"({"size":"two","covers":[]})"),
                  io_error);
  CHECK_THROWS_AS(parse_lattice_file(R"({"size":3,"covers":[[0,9]]})"),
                  param_error);
}

TEST_CASE("serialization round trips") {
  for (const Lattice& L : {pentagon_n5(), benzene(), boolean_lattice(3),
                           partition_lattice(3)}) {
    std::string text = serialize_lattice(L, "sample");
    std::string name;
    Lattice back = parse_lattice_file(text, &name);
    CHECK(name == "sample");
    CHECK(back.size() == L.size());
    CHECK(back.covers() == L.covers());
    CHECK(serialize_lattice(back, "sample") == text);
  }
}

TEST_CASE("dot export") {
  Lattice c = chain_lattice(2);
  std::string dot = export_dot(c);
  CHECK(dot == export_dot(c));
  // 3 nodes, 2 edges
  size_t edges = 0;
  for (size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1))
    ++edges;
  CHECK(edges == 2);

  GridQuotient g1 = grid_quotient(1);
  std::string gdot = export_dot(g1.lattice);
  size_t ranks = 0;
  for (size_t p = gdot.find("rank=same"); p != std::string::npos;
       p = gdot.find("rank=same", p + 1))
    ++ranks;
  CHECK(ranks == 5);  // heights 0..4
}

TEST_CASE("cli: check, construct, quotient, export") {
  TempDir tmp;
  write_file(tmp.file("fig.json"),
             R"({"size":7,"covers":[[0,1],[1,2],[2,3],[3,4],[0,5],[5,6],[6,4]]})");
  write_file(tmp.file("n5.json"), serialize_lattice(pentagon_n5()));

  CHECK(cli_dispatch({"check", tmp.file("fig.json"), "--property", "graded"}) ==
        1);
  CHECK(cli_dispatch({"check", tmp.file("n5.json"), "--property",
                      "left-modular"}) == 0);
  CHECK(cli_dispatch({"check", tmp.file("n5.json"), "--property", "graded",
                      "--json"}) == 1);
  CHECK(cli_dispatch({"check", tmp.file("n5.json"), "--property", "magic"}) ==
        2);
  CHECK(cli_dispatch({"check", tmp.file("missing.json")}) == 2);

  CHECK(cli_dispatch({"graded-quotient", tmp.file("n5.json"), "-o",
                      tmp.file("q.json")}) == 0);
  Lattice q = parse_lattice_file(read_file(tmp.file("q.json")));
  CHECK(canonical_form(q) == canonical_form(boolean_lattice(2)));
  CHECK(cli_dispatch({"graded-quotient", tmp.file("fig.json")}) == 1);

  CHECK(cli_dispatch({"construct", "m3", "-o", tmp.file("m3.json")}) == 0);
  CHECK(canonical_form(parse_lattice_file(read_file(tmp.file("m3.json")))) ==
        canonical_form(diamond_m3()));
  CHECK(cli_dispatch({"construct", "grid", "--k", "2", "-o",
                      tmp.file("g2.json")}) == 0);
  CHECK(parse_lattice_file(read_file(tmp.file("g2.json"))).size() == 13);
  CHECK(cli_dispatch({"construct", "nonsense", "-o", tmp.file("x.json")}) == 2);

  CHECK(cli_dispatch({"congruences", tmp.file("n5.json"), "--count"}) == 0);
  CHECK(cli_dispatch({"export-dot", tmp.file("n5.json"), "-o",
                      tmp.file("n5.dot")}) == 0);
  CHECK(read_file(tmp.file("n5.dot")).find("rankdir=BT") != std::string::npos);
}

TEST_CASE("cli: enumerate and verify") {
  TempDir tmp;
  std::string dir = tmp.file("catalog");
  CHECK(cli_dispatch({"enumerate", "--max-size", "6", "--out", dir}) == 0);
  CHECK(fs::exists(fs::path(dir) / "index.json"));
  CHECK(cli_dispatch({"verify", "theorem1", "--corpus", dir}) == 0);
  CHECK(cli_dispatch({"verify", "theorem1", "--max-size", "6", "--json"}) == 0);
  CHECK(cli_dispatch({"verify", "lemmas", "--max-size", "5"}) == 0);
  CHECK(cli_dispatch({"verify", "pq", "--max-size", "5", "--t", "2"}) == 0);
  CHECK(cli_dispatch({"verify", "birkhoff", "--max-size", "5"}) == 0);
  CHECK(cli_dispatch({"verify", "universal", "--max-size", "5"}) == 0);
  CHECK(cli_dispatch({"verify", "everything", "--max-size", "4"}) == 2);
  CHECK(cli_dispatch({"enumerate", "--max-size", "20"}) == 3);
}

TEST_CASE("json outputs follow the report schema") {
  using nlohmann::json;
  for (const std::string suite : {"lemmas", "pq", "birkhoff", "universal"}) {
    auto [code, out] =
        run_cli({"verify", suite, "--max-size", "5", "--json"});
    CHECK(code == 0);
    json j = json::parse(out);
    CHECK(j["suite"] == suite);
    CHECK(j["failures"] == 0);
    REQUIRE(j["records"].is_array());
    for (const auto& rec : j["records"]) {
      CHECK(rec.contains("suite"));
      CHECK(rec.contains("lattice_key"));
      CHECK(rec["verdict"] == "pass");
      CHECK(rec["witnesses"].is_array());
      CHECK(rec["timings"].contains("ms"));
    }
  }
  {
    auto [code, out] = run_cli({"verify", "theorem1", "--max-size", "5",
                                "--json"});
    CHECK(code == 0);
    json j = json::parse(out);
    CHECK(j["suite"] == "theorem1");
    CHECK(j["violations"].empty());
    CHECK(j["timings"].contains("ms"));
  }
  {
    TempDir tmp;
    write_file(tmp.file("n5.json"), serialize_lattice(pentagon_n5()));
    auto [code, out] = run_cli({"check", tmp.file("n5.json"), "--json"});
    CHECK(code == 1);
    json j = json::parse(out);
    CHECK(j["file"] == tmp.file("n5.json"));
    REQUIRE(j["properties"].is_array());
    CHECK(j["properties"].size() == 4);
    for (const auto& p : j["properties"]) {
      CHECK(p.contains("property"));
      CHECK(p.contains("holds"));
    }
    auto [code2, out2] =
        run_cli({"congruences", tmp.file("n5.json"), "--list", "--json"});
    CHECK(code2 == 0);
    json j2 = json::parse(out2);
    CHECK(j2["count"] == j2["congruences"].size());
  }
}
