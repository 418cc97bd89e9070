#include <doctest.h>

#include <sstream>

#include "sl2sym/cli.hpp"

using namespace sl2sym;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("act emits a sorted result document") {
  const Run r = run({"--json", "act", "--rep", "rho1", "--op", "lower", "--n", "3", "--expr", "s[2,1]"});
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["basis"] == "schur");
  CHECK(doc["n"] == 3);
  CHECK(doc["d"].is_null());
  REQUIRE(doc["terms"].size() == 2);
  CHECK(doc["terms"][0]["coefficient"] == "-2/1");
  CHECK(doc["terms"][0]["partition"] == Json::array({2}));
  CHECK(doc["terms"][1]["coefficient"] == "-4/1");
  CHECK(doc["metadata"]["command"] == "act");
  CHECK(run({"act", "--json", "--rep", "rho1", "--op", "lower", "--n", "3", "--expr", "s[2,1]"}).out == r.out);
}

TEST_CASE("act on diagrams and Kerov operators") {
  const Run hat = run({"--json", "act", "--rep", "hat", "--op", "raise", "--n", "2", "--expr", "y[1]"});
  REQUIRE(hat.code == 0);
  CHECK(Json::parse(hat.out)["basis"] == "diagram");
  const Run kerov = run({"--json", "act", "--rep", "kerov", "--op", "U", "--z", "1/2", "--zprime", "3", "--expr", "y[]"});
  REQUIRE(kerov.code == 0);
  const Json doc = Json::parse(kerov.out);
  CHECK(doc["n"].is_null());
  CHECK(doc["terms"][0]["coefficient"] == "1/2");
  CHECK(run({"act", "--rep", "kerov", "--op", "raise", "--z", "1", "--zprime", "1", "--expr", "y[]"}).code == 2);
  CHECK(run({"act", "--rep", "rho2", "--op", "raise", "--n", "2", "--expr", "s[1]"}).code == 2);
}

TEST_CASE("decompose tables") {
  const Run finite = run({"decompose", "--n", "3", "--d", "2"});
  CHECK(finite.code == 0);
  CHECK(finite.out == "Lambda_3^(2) = V6 + V2\n");
  const Run graded = run({"--json", "decompose", "--n", "3", "--max-weight", "10"});
  REQUIRE(graded.code == 0);
  const Json doc = Json::parse(graded.out);
  const int expected[] = {1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2};
  REQUIRE(doc["multiplicities"].size() == 11);
  for (int i = 0; i <= 10; ++i) CHECK(doc["multiplicities"][i]["multiplicity"] == expected[i]);
  CHECK(run({"decompose", "--n", "3", "--d", "2", "--max-weight", "4"}).code == 2);
  CHECK(run({"decompose", "--n", "3"}).code == 2);
}

TEST_CASE("kernel and character") {
  const Run k = run({"kernel", "--rep", "rho2", "--n", "3", "--d", "6"});
  CHECK(k.code == 0);
  CHECK(k.out.find("8 lowest weight vectors") != std::string::npos);
  const Run c = run({"character", "--n", "2", "--d", "1"});
  CHECK(c.code == 0);
  CHECK(c.out.find("dimension 3") != std::string::npos);
}

TEST_CASE("errors map to exit code 2") {
  CHECK(run({"decompose", "--n", "3", "--d", "2", "--bogus"}).code == 2);
  CHECK(run({"act", "--rep", "rho1", "--op", "lower", "--n", "3"}).code == 2);
  const Run bad = run({"act", "--rep", "rho1", "--op", "lower", "--n", "2", "--expr", "e[3]"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") == 0);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("verify reports discrepancies without failing") {
  const Run r = run({"verify", "--suite", "tables"});
  CHECK(r.code == 0);
  CHECK(r.out.find("computed:") != std::string::npos);
  CHECK(r.out.find("paper:") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
}
