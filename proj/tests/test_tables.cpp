#include <fstream>
#include <sstream>

#include "doctest.h"
#include "embedlie/error.hpp"
#include "embedlie/tables.hpp"
#include "json.hpp"

using namespace embedlie;

namespace {

std::string golden(const std::string& id) {
  std::ifstream f(std::string(EMBEDLIE_GOLDEN_DIR) + "/" + id + ".tsv", std::ios::binary);
  REQUIRE(f);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("tables match golden files byte for byte") {
  for (const auto& id : table_ids()) {
    CAPTURE(id);
    CHECK(render(emit_table(id), ReportFormat::Tsv) == golden(id));
  }
}

TEST_CASE("rendering is deterministic") {
  for (const auto& id : table_ids()) {
    CHECK(render(emit_table(id), ReportFormat::Json) == render(emit_table(id), ReportFormat::Json));
  }
}

TEST_CASE("json schema") {
  const auto doc = nlohmann::json::parse(render(emit_table("parabolic-exceptional"),
                                                ReportFormat::Json));
  CHECK(doc["table"] == "parabolic-exceptional");
  REQUIRE(doc["rows"].size() == 5);
  const std::vector<std::pair<std::string, int>> expected = {
      {"E_6", 19}, {"E_7", 26}, {"E_8", 35}, {"F_4", 21}, {"G_2", 3}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(doc["rows"][i]["type"] == expected[i].first);
    CHECK(doc["rows"][i]["dim_levi_ss"] == expected[i].second);
  }
}

TEST_CASE("homotopy table has the nine family rows") {
  const auto r = emit_table("homotopy");
  REQUIRE(r.rows.size() == 9);
  CHECK(std::get<std::string>(r.rows[0][2]) == "{3, 5, ..., 2m+1}");
  CHECK(std::get<std::string>(r.rows[8][2]) == "{3, 11}");
}

TEST_CASE("dims table: A_n has n^2 + 2n") {
  const auto r = emit_table("dims");
  int seen = 0;
  for (const auto& row : r.rows) {
    const auto& name = std::get<std::string>(row[0]);
    if (name[0] != 'A') continue;
    const auto n = std::get<std::int64_t>(row[1]);
    CHECK(std::get<std::int64_t>(row[3]) == n * n + 2 * n);
    ++seen;
  }
  CHECK(seen == kTableMaxRank);
}

TEST_CASE("unknown table id") { CHECK_THROWS_AS(emit_table("nope"), InvalidInput); }
