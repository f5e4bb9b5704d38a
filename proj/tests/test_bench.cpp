#include "sysid/bench/config.hpp"
#include "sysid/bench/csv.hpp"
#include "sysid/bench/presets.hpp"
#include "sysid/bench/sweep.hpp"
#include "sysid/errors.hpp"
#include "sysid/system_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace sysid;
using namespace sysid::bench;

namespace {

const char* kSmall = R"({
  "system": "double-integrator",
  "N": [600],
  "T": 3, "L": 2,
  "estimators": ["ols"],
  "seeds": [4],
  "record_wall_time": false
})";

Index count_lines(const std::string& s) {
  std::istringstream in(s);
  std::string line;
  Index n = 0;
  while (std::getline(in, line)) ++n;
  return n;
}

}  // namespace

TEST_CASE("presets") {
  for (const auto& name : preset_names()) {
    CHECK(is_preset(name));
    CHECK_NOTHROW(preset(name));
  }
  CHECK_FALSE(is_preset("nope"));
  CHECK_THROWS_AS(preset("nope"), InvalidArgument);
  const StateSpace di = preset("double-integrator");
  CHECK(di.n() == 2);
  CHECK(di.A()(0, 1) == 1.0);
  CHECK(spectral_radius(preset("stable-random").A()) == doctest::Approx(0.5));
  const StateSpace again = preset("stable-random");
  CHECK(again.A() == preset("stable-random").A());
}

TEST_CASE("config parsing") {
  const ExperimentConfig c = config_from_json(kSmall);
  CHECK(c.preset == "double-integrator");
  CHECK(c.N_grid == std::vector<Index>{600});
  CHECK(c.T == 3);
  CHECK(c.effective_L_max() == 2);
  CHECK(std::holds_alternative<GaussianNoise>(c.noise));

  const ExperimentConfig g = config_from_json(R"({
    "system": "scalar-marginal", "N": {"log2_min": 8, "log2_max": 10},
    "seeds": {"count": 3, "start": 7}, "noise": "none", "L": 3,
    "estimators": ["pfls", {"name": "fixed-filter", "poly": [-1]}, "select-L"]})");
  CHECK(g.N_grid == std::vector<Index>{256, 512, 1024});
  CHECK(g.seeds == std::vector<std::uint64_t>{7, 8, 9});
  CHECK(std::holds_alternative<NoNoise>(g.noise));
  CHECK(g.estimators[1].name() == "fixed-filter");
  CHECK(g.estimators[2].name() == "select-L");

  const NoiseModel adv = noise_from_json_text(
      R"({"type": "adversarial", "generator": "square-wave", "amplitude": 0.5, "period": 4})");
  REQUIRE(std::holds_alternative<AdversarialNoise>(adv));
  CHECK(std::get<AdversarialNoise>(adv).period == 4);
}

TEST_CASE("config validation errors") {
  CHECK_THROWS_AS(config_from_json("{"), ParseError);
  CHECK_THROWS_AS(config_from_json(R"({"N": [10], "seeds": [1], "estimators": ["ols"]})"), ParseError);
  CHECK_THROWS_AS(config_from_json(R"({"system": "double-integrator", "N": [], "seeds": [1],
                                       "estimators": ["ols"]})"),
                  InvalidArgument);
  CHECK_THROWS_AS(config_from_json(R"({"system": "double-integrator", "N": [10], "seeds": [1],
                                       "estimators": ["magic"]})"),
                  ParseError);
  CHECK_THROWS_AS(config_from_json(R"({"system": "double-integrator", "N": [10], "seeds": [1],
                                       "estimators": ["ols"], "max_cells": 10})"),
                  InvalidArgument);
  CHECK_THROWS_AS(config_from_json(R"({"system": "double-integrator", "N": [10], "seeds": [1], "L": 1,
                                       "estimators": [{"name": "fixed-filter", "poly": [1, 2]}]})"),
                  InvalidArgument);
  CHECK_THROWS_AS(config_from_json(R"({"system": "double-integrator", "N": [10], "seeds": [1],
                                       "estimators": ["ols"], "mu": 0})"),
                  InvalidArgument);
  CHECK_THROWS_AS(noise_from_json_text(R"({"type": "pink"})"), ParseError);
}

TEST_CASE("sweep row counts and ordering") {
  const auto one = run_sweep(config_from_json(kSmall));
  REQUIRE(one.size() == 1);
  CHECK(one[0].error.empty());
  CHECK(one[0].wall_ms == 0.0);
  CHECK(one[0].op_error <= one[0].fro_error * (1.0 + 1e-12));

  ExperimentConfig c = config_from_json(kSmall);
  c.estimators.push_back(EstimatorSpec{EstimatorSpec::Kind::Pfls, {}});
  c.N_grid = {300, 400, 500, 600, 700};
  c.seeds.clear();
  for (std::uint64_t s = 0; s < 20; ++s) c.seeds.push_back(s);
  const auto rows = run_sweep(c);
  REQUIRE(rows.size() == 200);
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].run_id == static_cast<Index>(i));
    CHECK(rows[i].estimator == (i % 2 == 0 ? "ols" : "pfls"));
    CHECK(rows[i].N == c.N_grid[i / 40]);
    CHECK(rows[i].seed == (i / 2) % 20);
    CHECK(rows[i].op_error <= rows[i].fro_error * (1.0 + 1e-12));
  }
  CHECK(count_lines(results_csv(rows)) == 204);
}

TEST_CASE("sweep output is deterministic across thread counts") {
  ExperimentConfig c = config_from_json(R"({
    "system": "stable-random", "N": [400, 800], "T": 3, "L": 2,
    "estimators": ["ols", "pfls", "select-L"], "seeds": [1, 2, 3], "record_wall_time": false})");
  c.threads = 1;
  const std::string a = strip_comments(results_csv(run_sweep(c)));
  c.threads = 3;
  const std::string b = strip_comments(results_csv(run_sweep(c)));
  CHECK(a == b);
  CHECK(a.rfind("run_id,preset,estimator,N,T,L,mu,seed,op_error,fro_error,opt_hat,cond_ok,wall_ms,error", 0) == 0);
}

TEST_CASE("failed runs fill the error column") {
  ExperimentConfig c = config_from_json(kSmall);
  c.N_grid = {5};  // too short for T L + 1
  const auto rows = run_sweep(c);
  REQUIRE(rows.size() == 1);
  CHECK_FALSE(rows[0].error.empty());
  const std::string csv = results_csv(rows, false);
  CHECK(csv.rfind("# schema=1\n# kind=sweep\n", 0) == 0);
}

TEST_CASE("csv formatting and atomic write") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(2.0) == "2");
  ResultRow r;
  r.preset = "a,b";
  r.estimator = "ols";
  r.error = "said \"no\"";
  const std::string csv = results_csv({r}, false);
  CHECK(csv.find("\"a,b\"") != std::string::npos);
  CHECK(csv.find("\"said \"\"no\"\"\"") != std::string::npos);

  const auto dir = std::filesystem::temp_directory_path() / "sysid_bench_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.csv";
  write_atomic(path, "old\n");
  write_atomic(path, csv);
  CHECK(read_text_file(path) == csv);
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    CHECK(entry.path().filename() == "out.csv");
  }
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(write_atomic("/nonexistent-dir/x.csv", csv), InvalidArgument);
}

TEST_CASE("lowerbound rows") {
  const auto rows = run_lowerbound(preset("double-integrator"), {256, 512}, {1, 2}, 3, 1);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].N == 256);
  CHECK(rows[3].seed == 2);
  CHECK(rows[0].gramian_over_N == rows[1].gramian_over_N);
  CHECK(rows[2].gramian_over_N > rows[0].gramian_over_N);
  for (const auto& r : rows) {
    CHECK(r.error.empty());
    CHECK(r.ols_op_error > 0.0);
  }
  const std::string csv = lowerbound_csv(rows, false);
  CHECK(csv.rfind("# schema=1\n# kind=lowerbound\nN,seed,ols_op_error,gramian_over_N,error\n", 0) == 0);
  CHECK_THROWS_AS(run_lowerbound(preset("double-integrator"), {}, {1}, 3), InvalidArgument);
}
