#include <catch_amalgamated.hpp>

#include <fstream>
#include <set>

#include <json.hpp>

#include "btx/config.hpp"
#include "btx/error.hpp"
#include "btx/registry.hpp"
#include "btx/report.hpp"
#include "support.hpp"

using namespace btx;
using btx::test::R;

namespace {

std::set<std::string> manifest() {
  std::ifstream in(std::string(BTX_TEST_DATA) + "/identity_manifest.txt");
  REQUIRE(in);
  std::set<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') out.insert(line);
  }
  return out;
}

}  // namespace

TEST_CASE("registry covers the label manifest exactly once", "[registry]") {
  std::set<std::string> labels, ids;
  for (const auto& e : registry()) {
    INFO(e.id);
    CHECK(labels.insert(e.paper_eq).second);
    CHECK(ids.insert(e.id).second);
    CHECK(!e.summary.empty());
    CHECK(!e.module.empty());
  }
  CHECK(labels == manifest());
}

TEST_CASE("listing and lookup", "[registry]") {
  CHECK(list_identities().size() >= 35);
  const auto appell = list_identities("appell");
  CHECK(!appell.empty());
  for (const auto* e : appell) CHECK(e->id.rfind("AP.", 0) == 0);
  CHECK(list_identities("no-such-module").empty());
  CHECK(find_identity("BT.a").paper_eq == "a");
  CHECK_THROWS_AS(find_identity("NOPE"), ConfigError);
  CHECK_THROWS_AS(verify({"NOPE"}, RunConfig{}), ConfigError);
}

TEST_CASE("bounds and grid overrides are validated", "[registry]") {
  RunConfig c;
  c.bounds.n_max = 3;
  CHECK_THROWS_AS(verify({"BT.a"}, c), ConfigError);
  c = RunConfig{};
  c.grid_values["q"] = {0, R("1/2"), 0};
  CHECK_THROWS_AS(verify({"BT.a"}, c), ConfigError);
  c.grid_values["q"] = {};
  CHECK_THROWS_AS(verify({"BT.a"}, c), ConfigError);
}

TEST_CASE("single identities verify", "[registry]") {
  RunConfig c;
  c.bounds.n_max = 20;
  const auto report = verify({"BT.a"}, c);
  REQUIRE(report.entries.size() == 1);
  CHECK(report.entries[0].status == Status::pass);
  CHECK(report.entries[0].points > 0);

  const auto basics = verify({"P1.c", "P1.cbis", "P1.g", "P1.h", "P1.n2", "R.i", "R.j", "R.i1", "P1.k"}, RunConfig{});
  for (const auto& e : basics.entries) {
    INFO(e.id);
    CHECK(e.status == Status::pass);
  }
  CHECK(basics.all_passed());
}

TEST_CASE("grid overrides change the sample points", "[registry]") {
  RunConfig c;
  c.grid_values["q"] = {R("1/7"), R("2/7"), R("3/7"), R("-1/7")};
  const auto report = verify({"BT.a"}, c);
  CHECK(report.entries[0].status == Status::pass);
  CHECK(report.entries[0].points == verify({"BT.a"}, RunConfig{}).entries[0].points);
}

TEST_CASE("a corrupted difference is caught with a reproducible witness", "[registry]") {
  RunConfig c;
  c.corruption = Corruption{4, 2, R("1/3")};
  const auto report = verify({"P1.c"}, c);
  const auto& e = report.entries.at(0);
  REQUIRE(e.status == Status::fail);
  REQUIRE(e.witness);
  CHECK(e.witness->lhs != e.witness->rhs);
  const Sides again = reproduce("P1.c", c, e.witness->case_label, e.witness->point);
  CHECK(again.lhs == e.witness->lhs);
  CHECK(again.rhs == e.witness->rhs);
  const Sides clean = reproduce("P1.c", RunConfig{}, e.witness->case_label, e.witness->point);
  CHECK(clean.equal());
  CHECK_THROWS_AS(reproduce("P1.c", c, "no such case", e.witness->point), ConfigError);
}

TEST_CASE("the Meixner entry is gated", "[registry]") {
  for (const auto def : {MeixnerDefinition::pochhammer, MeixnerDefinition::hypergeometric}) {
    RunConfig c;
    c.meixner = def;
    const auto e = verify({"C.n"}, c).entries.at(0);
    CHECK(e.status == Status::skipped);
    CHECK(e.skip_reason == "gate-failed");
    REQUIRE(e.witness);
    CHECK(e.witness->case_label == "gate");
    CHECK(e.witness->lhs != e.witness->rhs);
    CHECK(e.cases_run == 0);
  }
  const auto q1 = verify({"R.qto1"}, RunConfig{}).entries.at(0);
  CHECK(q1.status == Status::pass);
  CHECK(!q1.note.empty());
}

TEST_CASE("config files", "[registry]") {
  const RunConfig kv = parse_config(
      "# bounds\n"
      "n_max = 10\n"
      "m_max=5\n"
      "seed = 7\n"
      "meixner = hypergeometric\n"
      "grid.q = 0, 1/7, 2/7\n"
      "corrupt = 3,1,2\n");
  CHECK(kv.bounds.n_max == 10);
  CHECK(kv.bounds.m_max == 5);
  CHECK(kv.seed == 7);
  CHECK(kv.meixner == MeixnerDefinition::hypergeometric);
  CHECK(kv.grid_values.at("q") == std::vector<Rational>{0, R("1/7"), R("2/7")});
  REQUIRE(kv.corruption);
  CHECK(kv.corruption->n == 3);
  CHECK(kv.corruption->delta == Rational(2));

  const RunConfig js = parse_config(R"({"n_max": 9, "grid": {"x": ["1/2", "1/3"]}, "sequences": ["harmonic"]})");
  CHECK(js.bounds.n_max == 9);
  CHECK(js.grid_values.at("x") == std::vector<Rational>{R("1/2"), R("1/3")});
  CHECK(js.sequences.size() == 1);

  CHECK_THROWS_AS(parse_config("colour = blue\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("n_max\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("meixner = classic\n"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/btx.conf"), ConfigError);
}

TEST_CASE("reports are deterministic apart from timing", "[registry]") {
  const std::vector<std::string> ids{"BT.a", "C.n", "P1.c", "PR.o2"};
  RunConfig c;
  c.grid_values["y"] = {R("1/4"), R("3/4")};
  const auto a = render(verify(ids, c), Format::json, false);
  const auto b = render(verify(ids, c), Format::json, false);
  CHECK(a == b);
  CHECK(a.find("millis") == std::string::npos);
  CHECK(render(verify(ids, c), Format::json, true).find("millis") != std::string::npos);

  const auto doc = nlohmann::json::parse(a);
  CHECK(doc["entries"].size() == ids.size());
  CHECK(doc["summary"]["total"] == 4);
  CHECK(doc["summary"]["skipped"] == 1);
  CHECK(doc["config"]["grid"]["y"][0] == "1/4");
  CHECK(doc["entries"][1]["witness"]["point"]["beta"] == "1/3");

  c.corruption = Corruption{2, 1, 1};
  const auto failed = nlohmann::json::parse(render(verify({"P1.c"}, c), Format::json, false));
  CHECK(failed["entries"][0]["status"] == "fail");
  CHECK(failed["entries"][0]["witness"]["lhs"].is_string());
  CHECK(failed["config"]["corruption"]["n"] == 2);

  const auto csv = render(verify({"BT.a"}, RunConfig{}), Format::csv, false);
  CHECK(csv.rfind("id,paper_eq,status", 0) == 0);
  CHECK(render(verify({"BT.a"}, RunConfig{}), Format::pretty, false).find("BT.a") != std::string::npos);
  CHECK_THROWS_AS(parse_format("xml"), ConfigError);
}
