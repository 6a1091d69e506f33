#include "doctest.h"
#include "embedlie/query.hpp"
#include "json.hpp"

using namespace embedlie;

TEST_CASE("exit codes follow the verdict") {
  CHECK(run_query(QuerySpec::parse("G2", 6), false).exit_code == 0);
  CHECK(run_query(QuerySpec::parse("G2", 7), false).exit_code == 1);
  CHECK(run_query(QuerySpec::parse("A3", 7), false).exit_code == 2);
  CHECK_THROWS_AS(QuerySpec::parse("G2", -1), InvalidInput);
  CHECK_THROWS_AS(QuerySpec::parse("G3", 1), InvalidInput);
}

TEST_CASE("json output schema") {
  const auto out = run_query(QuerySpec::parse("B4 x C3", 26), true);
  const auto doc = nlohmann::json::parse(out.body);
  CHECK(doc.size() == 6);
  CHECK(doc["verdict"] == "Embeds");
  CHECK(doc["rule"] == "semisimple");
  CHECK(doc["inequality"] == "dim G + k > 2d + r: 57 + 0 > 2*26 + 2");
  CHECK(doc["total_dim"] == 57);
  CHECK(doc["d"] == 26);
  CHECK(doc["semantics"] ==
        "every smooth affine variety of dimension d admits an embedding into the target");

  const auto unknown = nlohmann::json::parse(run_query(QuerySpec::parse("A1^3", 4), true).body);
  CHECK(unknown["verdict"] == "Unknown");
  CHECK(unknown["rule"].is_null());
}

TEST_CASE("text output names the target in canonical form") {
  const auto out = run_query(QuerySpec::parse("Aff1 x A2", 4), false);
  CHECK(out.body.find("target:     A2 x Aff1\n") == 0);
  CHECK(out.body.find("verdict:    Unknown") != std::string::npos);
}
