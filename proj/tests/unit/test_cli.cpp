#include "commands.hpp"
#include "config.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

using namespace awlab;
using namespace awlab::cli;

TEST_CASE("config text: comments, whitespace and values") {
  const auto kv = parse_config_text("# comment\n q = 0.6 \n\nN=5\nprecision = extended # trailing\n");
  CHECK(kv.at("q") == "0.6");
  CHECK(kv.at("N") == "5");
  CHECK(kv.at("precision") == "extended");
  const auto rc = to_run_config(kv);
  CHECK(rc.suite.ctx.q == 0.6);
  CHECK(rc.suite.N == 5);
  CHECK(rc.suite.ctx.precision == Precision::Extended);
}

TEST_CASE("config text: unknown, duplicate and malformed entries are rejected with the line") {
  try {
    parse_config_text("q = 0.5\nfoo = 1\n", "cfg.txt");
    FAIL("unknown key accepted");
  } catch (const ConfigError& e) {
    const std::string m = e.what();
    CHECK(m.find("foo") != std::string::npos);
    CHECK(m.find("cfg.txt:2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config_text("q = 0.5\nq = 0.6\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("q 0.5\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("q =\n"), ConfigError);
}

TEST_CASE("conversion validates values") {
  CHECK_THROWS_AS(to_run_config({{"q", "1.2"}}), ConfigError);
  CHECK_THROWS_AS(to_run_config({{"q", "0.5x"}}), ConfigError);
  CHECK_THROWS_AS(to_run_config({{"N", "-1"}}), ConfigError);
  CHECK_THROWS_AS(to_run_config({{"N", "2.5"}}), ConfigError);
  CHECK_THROWS_AS(to_run_config({{"tol", "0"}}), ConfigError);
  CHECK_THROWS_AS(to_run_config({{"precision", "quad"}}), ConfigError);
  CHECK_THROWS_AS(to_run_config({{"alpha0", "0.1"}, {"alpha1", "0.2"}}), ConfigError);
  const auto rc = to_run_config({{"alpha0", "0.1"}, {"alpha1", "0.2"}, {"alpha2", "-0.3"}, {"tol", "1e-6"}});
  REQUIRE(rc.suite.alpha.has_value());
  CHECK(rc.suite.alpha->alpha2 == -0.3);
  CHECK(rc.suite.tol.value() == 1e-6);
  try {
    to_run_config({{"q", "1.2"}});
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("q") != std::string::npos);
  }
}

TEST_CASE("environment precision replaces the configured one") {
  KeyValues kv{{"precision", "double"}};
  setenv("AWLAB_PRECISION", "extended", 1);
  apply_environment(kv);
  unsetenv("AWLAB_PRECISION");
  CHECK(kv.at("precision") == "extended");
  KeyValues untouched{{"precision", "double"}};
  apply_environment(untouched);
  CHECK(untouched.at("precision") == "double");
}

TEST_CASE("grid parsing and Cartesian expansion") {
  const auto axes = parse_grid_text("suite = aw3\nq = 0.5, 0.7\nN = 2,3,4\n");
  REQUIRE(axes.size() == 3);
  const auto pts = expand_grid({{"tol", "1e-9"}}, axes);
  REQUIRE(pts.size() == 6);
  // last axis fastest
  CHECK(pts[0].at("q") == "0.5");
  CHECK(pts[0].at("N") == "2");
  CHECK(pts[1].at("N") == "3");
  CHECK(pts[3].at("q") == "0.7");
  CHECK(pts[5].at("tol") == "1e-9");
  CHECK_THROWS_AS(parse_grid_text("out = a.json\n"), ConfigError);
  CHECK_THROWS_AS(parse_grid_text("# nothing\n"), ConfigError);
  CHECK_THROWS_AS(parse_grid_text("bogus = 1, 2\n"), ConfigError);
}

TEST_CASE("sweep output does not depend on the number of workers") {
  const auto axes = parse_grid_text("suite = aw3\nq = 0.5, 0.8, 1.5\nN = 2, 3\n");
  const auto pts = expand_grid({}, axes);
  const auto one = sweep_json(axes, run_sweep(pts, 1));
  const auto many = sweep_json(axes, run_sweep(pts, 4));
  CHECK(one == many);
  const auto j = nlohmann::json::parse(one);
  CHECK(j["meta"]["points"] == 6);
  CHECK(j["summary"]["invalid"] == 2);
  CHECK(j["summary"]["pass"] == 4);
  CHECK(j["points"][4]["status"] == "invalid");
  CHECK(j["points"][4]["report"].is_null());
  for (const auto& a : j["aggregate"]) CHECK(a["failures"] == 0);
}

TEST_CASE("verify and tables commands write through the given streams") {
  std::ostringstream out, err;
  RunConfig rc;
  rc.suite.N = 2;
  CHECK(cmd_verify(Suite::AW3, rc, out, err) == kPass);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j["meta"]["dims"]["N"] == 2);
  CHECK(err.str().find("0 failed") != std::string::npos);

  std::ostringstream tout, terr;
  CHECK(cmd_tables(TableKind::Weights, rc, tout, terr) == kPass);
  CHECK(tout.str().rfind("#", 0) == 0);
}
