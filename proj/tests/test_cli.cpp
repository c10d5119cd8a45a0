#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "iwahori/cli.hpp"
#include "iwahori/json_io.hpp"

using namespace iwahori;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("iwahori_test_" + name + ".json");
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("decompose") {
    const auto path = write_temp("u", R"({"p": 2, "entries": [["0", "1"], ["2", "0"]]})");
    const auto r = run({"decompose", path});
    REQUIRE(r.code == kExitOk);
    const Json doc = Json::parse(r.out);
    CHECK(doc["kbar"] == Json::array({0, 1}));
    CHECK(doc["w"] == Json::array({2, 1}));
    CHECK(doc["n"] == 2);

    const auto m = run({"--mod-center", "decompose", path});
    const Json dm = Json::parse(m.out);
    CHECK(dm["kbar"] == Json::array({-1, 0}));
    CHECK(dm["central_exponent"] == 1);

    const auto csv = run({"--format", "csv", "decompose", path});
    CHECK(csv.out == "k,w\n0 1,2 1\n");
  }

  TEST_CASE("eval") {
    const auto path = write_temp("x", R"({"p": 3, "entries": [["1", "1/3"], ["0", "1"]]})");
    const auto r = run({"eval", path});
    REQUIRE(r.code == kExitOk);
    const Json v = Json::parse(r.out);
    CHECK(v["zero"] == false);
    CHECK(v["sign"] == 1);
    CHECK(v["psi_num"] == 1);
    CHECK(v["psi_den"] == 3);

    const auto scaled = run({"--scale", "5/2", "eval", path});
    CHECK(Json::parse(scaled.out)["coeff"] == "5/2");
    const auto zero = run({"--scale", "0", "eval", path});
    CHECK(Json::parse(zero.out)["zero"] == true);

    const auto csv = run({"--format", "csv", "eval", path});
    CHECK(csv.out == "zero,sign,eps_exp,q_exp,psi_num,psi_den\nfalse,1,0,0,1,3\n");
  }

  TEST_CASE("exit codes") {
    CHECK(run({"eval", write_temp("bad", "{not json")}).code == kExitParseError);
    CHECK(run({"eval", "/nonexistent/iwahori.json"}).code == kExitParseError);
    CHECK(run({"eval", write_temp("sing", R"({"p": 2, "entries": [["1", "2"], ["2", "4"]]})")}).code ==
          kExitSingular);
    const auto ok = write_temp("id", R"({"p": 2, "entries": [["1", "0"], ["0", "1"]]})");
    CHECK(run({"--n", "3", "eval", ok}).code == kExitParseError);
    CHECK(run({"--p", "3", "eval", ok}).code == kExitParseError);
    CHECK(run({"--n", "5", "table"}).code == kExitGuard);
    CHECK(run({"--range", "7", "table"}).code == kExitGuard);
    CHECK(run({"--n", "6", "verify", "hecke"}).code == kExitGuard);
    CHECK(run({"--n", "5", "verify", "whittaker"}).code == kExitGuard);
    CHECK(run({"verify", "nonsense"}).code == kExitParseError);
    CHECK(run({"--eps-exp", "2", "table"}).code == kExitParseError);
    CHECK(run({"--p", "4", "table"}).code == kExitParseError);
    CHECK(run({}).code == kExitParseError);
    CHECK(run({"--bogus", "table"}).code == kExitParseError);
    CHECK(run({"--help"}).code == kExitOk);
  }

  TEST_CASE("table") {
    const auto r = run({"--range", "1", "--include-zeros", "table"});
    REQUIRE(r.code == kExitOk);
    const Json doc = Json::parse(r.out);
    // k_1 in {-1,0,1}, two permutations
    CHECK(doc["rows"].size() == 6);
    const auto nz = run({"--range", "1", "table"});
    // zero only at ((-1,0), id)
    CHECK(Json::parse(nz.out)["rows"].size() == 5);

    const auto csv = run({"--n", "3", "--range", "2", "--format", "csv", "table"});
    CHECK(csv.out.rfind("k,w,zero,sign,eps_exp,q_exp\n", 0) == 0);
  }

  TEST_CASE("table rows agree with eval at the corresponding matrix") {
    const auto r = run({"--n", "3", "--p", "3", "--eps-exp", "2", "--range", "1", "table"});
    REQUIRE(r.code == kExitOk);
    const Json doc = Json::parse(r.out);
    int checked = 0;
    for (const auto& row : doc["rows"]) {
      const std::vector<int> k = row["k"];
      const std::vector<int> w = row["w"];
      const PAdicMatrix g = PAdicMatrix::torus(Weight(k), 3) * PAdicMatrix::permutation(Permutation(w), 3);
      const auto e = run({"--n", "3", "--p", "3", "--eps-exp", "2", "eval",
                          write_temp("row", matrix_to_json(g).dump())});
      REQUIRE(e.code == kExitOk);
      Json expected = row;
      expected.erase("k");
      expected.erase("w");
      Json actual = Json::parse(e.out);
      CHECK(actual["sign"] == expected["sign"]);
      CHECK(actual["eps_exp"] == expected["eps_exp"]);
      CHECK(actual["q_exp"] == expected["q_exp"]);
      ++checked;
    }
    CHECK(checked > 0);
  }

  TEST_CASE("verify is deterministic") {
    const auto a = run({"--n", "3", "--samples", "20", "--seed", "9", "verify", "all"});
    const auto b = run({"--n", "3", "--samples", "20", "--seed", "9", "verify", "all"});
    REQUIRE(a.code == kExitOk);
    CHECK(a.out == b.out);
    const Json doc = Json::parse(a.out);
    CHECK(doc["ok"] == true);
    CHECK(doc["results"].size() == 3);
    const auto csv = run({"--format", "csv", "verify", "hecke"});
    CHECK(csv.out.rfind("suite,check,passed,failed\n", 0) == 0);
  }

  TEST_CASE("installed binary runs") {
    const std::string cmd = std::string("\"") + IWAHORI_CLI_PATH + "\" --n 2 verify hecke > /dev/null";
    CHECK(std::system(cmd.c_str()) == 0);
  }
}
