#include <doctest.h>

#include <string>

#include "monopole_spectra/run_config.hpp"
#include "monopole_spectra/table_io.hpp"

using namespace monopole;

TEST_CASE("minimal config gets defaults") {
  const auto cfg = parse_config(R"({"geometry":{"alpha":0.5},"kratzer":{"A":2,"D":4}})", "<inline>");
  CHECK(cfg.params.constants.hbar == 1.0);
  CHECK(cfg.params.constants.mass == 1.0);
  CHECK(cfg.params.constants.charge == 1.0);
  CHECK(cfg.params.geometry.alpha == 0.5);
  CHECK(cfg.params.kratzer.A == 2.0);
  CHECK(cfg.params.kratzer.D == 4.0);
  CHECK(cfg.params.screening.delta == 0.0);
  CHECK(cfg.grid.points == 40000);
  CHECK(!cfg.grid.r_min.has_value());
  CHECK(cfg.series.tolerance == 1e-10);
  CHECK(cfg.series.max_terms == 2'000'000);
  CHECK(cfg.output.format == OutputFormat::csv);
}

TEST_CASE("full config round-trips") {
  const auto cfg = parse_config(R"({
    "constants": {"hbar": 2.0, "mass": 3.0, "charge": 0.5},
    "geometry": {"alpha": 0.8},
    "kratzer": {"A": 0.5, "D": 1.0},
    "screening": {"delta": 0.01},
    "grid": {"r_min": 1e-5, "r_max": 90.0, "points": 50000},
    "series": {"tolerance": 1e-9, "max_terms": 500000},
    "output": {"path": "out.csv", "format": "json"}
  })", "<inline>");
  CHECK(cfg.params.constants.hbar == 2.0);
  CHECK(cfg.params.screening.delta == 0.01);
  CHECK(*cfg.grid.r_min == 1e-5);
  CHECK(*cfg.grid.r_max == 90.0);
  CHECK(cfg.grid.points == 50000);
  CHECK(cfg.series.max_terms == 500000);
  CHECK(cfg.output.path == "out.csv");
  CHECK(cfg.output.format == OutputFormat::json);
}

TEST_CASE("invariant violations are configuration errors naming the field") {
  const auto expect_error = [](const std::string& body, const std::string& needle) {
    try {
      parse_config(body, "<inline>");
      FAIL("expected ConfigError for: ", body);
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error(R"({"geometry":{"alpha":1.2},"kratzer":{"A":2,"D":4}})", "alpha");
  expect_error(R"({"geometry":{"alpha":0.5},"kratzer":{"A":2,"D":4},"screening":{"delta":-0.1}})",
               "delta");
  expect_error(R"({"geometry":{"alpha":0.5},"kratzer":{"A":-2,"D":4}})", "A");
  expect_error(R"({"kratzer":{"A":2,"D":4}})", "geometry");
  expect_error(R"({"geometry":{"alpha":0.5}})", "kratzer");
  expect_error(R"({"geometry":{"alpha":0.5},"kratzer":{"A":2,"D":4},"grid":{"points":10}})",
               "points");
  expect_error(R"({"geometry":{"alpha":0.5},"kratzer":{"A":2,"D":4},"typo":1})", "typo");
  expect_error(R"({"geometry":{"alpha":0.5},"kratzer":{"A":2,"D":4},"output":{"format":"xml"}})",
               "format");
  expect_error(R"({"geometry":{"alpha":0.5},"kratzer":{"A":2,"D":4},"constants":5})",
               "must be an object");
  expect_error(R"({"geometry":{"alpha":0.5},"kratzer":{"A":2,"D":4},"grid":{"points":"many"}})",
               "points");
}

TEST_CASE("parse errors carry position context") {
  try {
    parse_config("{\"geometry\": {\n  \"alpha\": }\n}", "broken.json");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("broken.json") != std::string::npos);
    CHECK(msg.find("parse error") != std::string::npos);
  }
}

TEST_CASE("missing file is a configuration error") {
  CHECK_THROWS_AS(load_config("/nonexistent/nowhere.json"), ConfigError);
}

TEST_CASE("tables serialize deterministically") {
  Table t;
  t.columns = {"n", "alpha", "label", "ok"};
  t.rows.push_back({std::int64_t{1}, 0.30000000000000004, std::string("x"), true});
  t.rows.push_back({std::int64_t{2}, -1.0 / 3.0, std::string("y"), false});

  const std::string csv_a = to_csv(t);
  const std::string csv_b = to_csv(t);
  CHECK(csv_a == csv_b);
  CHECK(csv_a.substr(0, csv_a.find('\n')) == "n,alpha,label,ok");
  CHECK(csv_a.find("0.30000000000000004") != std::string::npos);  // 17 significant digits
  CHECK(csv_a.find("true") != std::string::npos);

  const std::string json_a = to_json(t);
  CHECK(json_a == to_json(t));
  CHECK(json_a.find("\"rows\"") != std::string::npos);
  CHECK(json_a.find("\"alpha\": 0.30000000000000004") != std::string::npos);
}
