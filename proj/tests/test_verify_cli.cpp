#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "symcone/cli.hpp"
#include "symcone/verify.hpp"

using namespace symcone;
using namespace symcone::verify;

namespace {
std::string fixture(const std::string& name) {
  return std::string(SYMCONE_FIXTURE_DIR) + "/" + name;
}

VerifyConfig smoke_config() {
  std::ifstream in(fixture("smoke_pass.json"));
  REQUIRE(in.good());
  return config_from_json(json::parse(in));
}
}  // namespace

TEST_CASE("config parsing: defaults and overrides") {
  VerifyConfig cfg = config_from_json(json::object());
  CHECK(cfg.suites.empty());
  CHECK(cfg.algebras.size() == 3);
  CHECK(cfg.lambdas.size() == cfg.mus.size());

  VerifyConfig smoke = smoke_config();
  CHECK(smoke.suites.size() == 3);
  CHECK(smoke.draws == 25);
  CHECK(smoke.sizes.rank1 == 48);
  CHECK(smoke.seed == 7);
}

TEST_CASE("config validation rejects bad grids at load time") {
  // convergence condition: Re > -k_r + n/r - 1
  json j = {{"algebras", {"sym2"}},
            {"lambdas", {0.2}},
            {"mus", {3.0}},
            {"signatures", {{0, 0}}}};
  CHECK_THROWS_AS(config_from_json(j), ConfigError);

  CHECK_THROWS_AS(config_from_json({{"suites", {"no-such-suite"}}}), ConfigError);
  CHECK_THROWS_AS(config_from_json({{"algebras", {"sym5"}}}), ConfigError);
  CHECK_THROWS_AS(config_from_json({{"lambdas", {2.0}}, {"mus", {2.0, 3.0}}}),
                  ConfigError);
  CHECK_THROWS_AS(config_from_json({{"signatures", {{1, 2}}}}), ConfigError);
  CHECK_THROWS_AS(config_from_json({{"l_range", {2, 1}}}), ConfigError);
}

TEST_CASE("empty suite list gives an empty passing report") {
  VerifyConfig cfg;
  cfg.suites.clear();
  Report rep = run(cfg);
  CHECK(rep.records.empty());
  CHECK(rep.all_pass());
}

TEST_CASE("smoke run passes and is deterministic") {
  VerifyConfig cfg = smoke_config();
  Report r1 = run(cfg);
  CHECK(!r1.records.empty());
  for (const auto& rec : r1.records) {
    INFO(rec.suite << "/" << rec.check << " rel=" << rec.rel_error);
    CHECK(rec.pass);
  }
  // suites execute concurrently; output must still be byte-identical
  Report r2 = run(cfg);
  CHECK(r1.to_json().dump(2) == r2.to_json().dump(2));
}

TEST_CASE("report JSON round-trips byte-identically") {
  VerifyConfig cfg = smoke_config();
  cfg.suites = {"rankin-cohen"};
  Report rep = run(cfg);
  const std::string once = rep.to_json().dump(2);
  Report back = Report::from_json(json::parse(once));
  const std::string twice = back.to_json().dump(2);
  CHECK(once == twice);
}

TEST_CASE("convergence tables") {
  auto rows = convergence_table("rank1-beta", {8, 16, 32});
  REQUIRE(rows.size() == 3);
  // decreasing down to the floating floor
  CHECK((rows[1].err_true <= rows[0].err_true || rows[1].err_true < 1e-13));
  CHECK((rows[2].err_true <= rows[1].err_true || rows[2].err_true < 1e-13));

  const std::string csv = table_to_csv(rows);
  CHECK(csv.rfind("size,value,err_est,err_true\n", 0) == 0);

  auto rows2 = convergence_table("sym2-minktype-cartesian", {8, 12, 16});
  REQUIRE(rows2.size() == 3);
  CHECK((rows2[2].err_true <= rows2[0].err_true || rows2[2].err_true < 1e-10));

  CHECK_THROWS_AS(convergence_table("no-such-check", {8}), ConfigError);
}

TEST_CASE("CLI exit codes") {
  // 0: passing run
  CHECK(cli_main({"run", "--config", fixture("smoke_pass.json"), "--suite",
                  "rankin-cohen"}) == 0);
  // 1: forced failure through an unattainable tolerance
  CHECK(cli_main({"run", "--config", fixture("forced_fail.json")}) == 1);
  // 2: usage and config errors
  CHECK(cli_main({"run"}) == 2);                                   // missing --config
  CHECK(cli_main({"run", "--config", "/nonexistent.json"}) == 2);  // no file
  CHECK(cli_main({"table", "--check", "no-such-check", "--sizes", "8"}) == 2);
  CHECK(cli_main({"bogus-subcommand"}) == 2);

  // malformed JSON
  const std::string bad = "/tmp/symcone_bad_config.json";
  {
    std::ofstream of(bad);
    of << "{ not json";
  }
  CHECK(cli_main({"run", "--config", bad}) == 2);
  std::remove(bad.c_str());

  // table writes CSV with the fixed header
  const std::string out_csv = "/tmp/symcone_table.csv";
  CHECK(cli_main({"table", "--check", "rank1-beta", "--sizes", "8,16",
                  "--output", out_csv}) == 0);
  std::ifstream in(out_csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "size,value,err_est,err_true");
  std::remove(out_csv.c_str());
}

TEST_CASE("report file output") {
  VerifyConfig cfg = smoke_config();
  cfg.suites = {"rankin-cohen"};
  cfg.output = "/tmp/symcone_report.json";
  Report rep = run(cfg);
  std::ofstream of(cfg.output);
  of << rep.to_json().dump(2) << "\n";
  of.close();
  std::ifstream in(cfg.output);
  json j = json::parse(in);
  CHECK(j.contains("environment"));
  CHECK(j["environment"]["version"] == kVersion);
  CHECK(j["summary"]["failed"] == 0);
  std::remove(cfg.output.c_str());
}
