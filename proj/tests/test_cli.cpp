#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "icosa/cli.hpp"

using namespace icosa;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = cli_main(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("verify exits 0 and reports a fully green suite") {
  const RunResult r = run({"verify"});
  CHECK(r.code == 0);
  CHECK(r.out.find("summary:") != std::string::npos);
  CHECK(r.out.find("0 fail, 0 errata") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("verify --json is machine readable and byte-stable") {
  const RunResult a = run({"verify", "--json"});
  const RunResult b = run({"verify", "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);  // byte-identical across runs

  const auto j = nlohmann::json::parse(a.out);
  CHECK(j.at("summary").at("ok").get<bool>());
  CHECK(j.at("summary").at("fail").get<int>() == 0);
  CHECK(j.at("checks").is_array());
  CHECK(j.at("checks").size() == j.at("summary").at("total").get<std::size_t>());
}

TEST_CASE("verify --table runs a single table") {
  CHECK(run({"verify", "--table", "3"}).code == 0);
  const RunResult r = run({"verify", "--table", "7", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("checks").size() == 26);

  // Out-of-range table ids are usage errors.
  CHECK(run({"verify", "--table", "9"}).code == 2);
  CHECK(run({"verify", "--table", "0"}).code == 2);
}

TEST_CASE("tables emits recomputed tables") {
  const RunResult all = run({"tables"});
  CHECK(all.code == 0);
  for (int n = 1; n <= 7; ++n)
    CHECK(all.out.find("table " + std::to_string(n) + ":") != std::string::npos);

  const RunResult t7 = run({"tables", "--table", "7"});
  CHECK(t7.code == 0);
  CHECK(t7.out.find("(1,2,3,4,5) = Q6^3") != std::string::npos);
  CHECK(t7.out.find("(1,5,4,3,2) = Q6^2") != std::string::npos);

  const RunResult t1 = run({"tables", "--table", "1", "--json"});
  CHECK(t1.code == 0);
  const auto j = nlohmann::json::parse(t1.out);
  CHECK(j.at("rows").size() == 10);
  CHECK(j.at("rows")[0].at("name") == "D");
  CHECK(j.at("rows")[3].at("word") == "DYDT");
}

TEST_CASE("classify prints class, axis, order and image") {
  const RunResult r = run({"classify", "(1,4,5)"});
  CHECK(r.code == 0);
  CHECK(r.out == "class: face\n"
                 "axis: {1,3,2+},{2',1'',3''}\n"
                 "order: 3\n"
                 "a5: (1,4,5)\n");

  // Icosahedron-side input is inferred from the primed labels.
  const RunResult s =
      run({"classify", "(1,3,2+)(2,3',1')(2',1'',3'')(1+,2'',3+)"});
  CHECK(s.code == 0);
  CHECK(s.out.find("class: face") != std::string::npos);
  CHECK(s.out.find("a5: (1,4,5)") != std::string::npos);

  // Bare digits default to the A5 domain but can be forced.
  CHECK(run({"classify", "(1,2,3)"}).code == 0);
  CHECK(run({"classify", "(1,2,3)", "--domain", "ico"}).code == 2);
}

TEST_CASE("classify rejects non-members with exit 2") {
  const RunResult odd = run({"classify", "(1,2)"});
  CHECK(odd.code == 2);
  CHECK(odd.err.find("not an element") != std::string::npos);

  const RunResult unknown = run({"classify", "(1,7)"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown label '7'") != std::string::npos);
  CHECK(unknown.err.find("position 4") != std::string::npos);
}

TEST_CASE("word prints the certified shortest word") {
  CHECK(run({"word", "(1,4,5)"}).out == "D\n");
  CHECK(run({"word", ""}).out == "-\n");
  // A = DYDT gives the upper bound; the certified word is never longer.
  const RunResult a = run({"word", "(2,3,4)"});
  CHECK(a.code == 0);
  CHECK(a.out.size() - 1 <= 4);
}

TEST_CASE("map crosses the isomorphism in both directions") {
  const std::string d_cycles = "(1,3,2+)(2,3',1')(2',1'',3'')(1+,2'',3+)";
  const RunResult to_ico = run({"map", "(1,4,5)", "--from", "a5"});
  CHECK(to_ico.code == 0);
  CHECK(to_ico.out == d_cycles + "\n");

  const RunResult to_a5 = run({"map", d_cycles, "--from", "ico"});
  CHECK(to_a5.code == 0);
  CHECK(to_a5.out == "(1,4,5)\n");

  // The identity formats as the empty string.
  CHECK(run({"map", "", "--from", "a5"}).out == "\n");

  // --from is required: bare digits are valid on both sides.
  CHECK(run({"map", "(1,2,3)"}).code == 2);
  CHECK(run({"map", "(1,2)", "--from", "a5"}).code == 2);
}

TEST_CASE("graph emits the derived structure") {
  const RunResult text = run({"graph"});
  CHECK(text.code == 0);
  CHECK(text.out.find("vertices (12):") != std::string::npos);
  CHECK(text.out.find("edges (30):") != std::string::npos);
  CHECK(text.out.find("faces (20):") != std::string::npos);
  CHECK(text.out.find("antipodes (6):") != std::string::npos);

  const RunResult j = run({"graph", "--json"});
  CHECK(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("vertices").size() == 12);
  CHECK(parsed.at("edges").size() == 30);
  CHECK(parsed.at("faces").size() == 20);
  CHECK(parsed.at("antipodes").size() == 6);
}

TEST_CASE("correspondence emits sixty rows with the fixed field names") {
  const RunResult j = run({"correspondence", "--json"});
  CHECK(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  REQUIRE(parsed.at("rows").size() == 60);

  const std::set<std::string> expected_fields = {
      "word", "rotation_cycles", "class", "axis", "a5_cycles", "a5_class"};
  for (const auto& row : parsed.at("rows")) {
    std::set<std::string> fields;
    for (auto it = row.begin(); it != row.end(); ++it) fields.insert(it.key());
    CHECK(fields == expected_fields);
  }
  CHECK(parsed.at("rows")[0].at("word") == "-");
  CHECK(parsed.at("rows")[0].at("class") == "identity");

  const RunResult text = run({"correspondence"});
  CHECK(text.code == 0);
  CHECK(text.out.find("word") != std::string::npos);
  CHECK(std::count(text.out.begin(), text.out.end(), '\n') == 61);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"classify"}).code == 2);  // missing the permutation argument
}

TEST_CASE("help exits 0") {
  const RunResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
  CHECK(r.out.find("correspondence") != std::string::npos);
}
