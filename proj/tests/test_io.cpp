#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "hetpanel/analysis.hpp"
#include "hetpanel/config.hpp"
#include "hetpanel/csv.hpp"
#include "hetpanel/errors.hpp"
#include "hetpanel/json_writer.hpp"
#include "hetpanel/montecarlo.hpp"
#include "hetpanel/rng.hpp"

using namespace hetpanel;

namespace {

std::filesystem::path temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "hetpanel_io_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& body) {
  const auto path = temp_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << body;
  return path.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("read_long_csv pivots and validates") {
  const std::string path = write_file("ok.csv",
                                      "unit,time,value\n"
                                      "a,2,1.5\n"
                                      "a,1,1.0\n"
                                      "b,1,2.0\n"
                                      "a,3,2.5\n"
                                      "b,2,2.5\n"
                                      "b,3,3.0\n");
  const Panel panel = read_long_csv(path);
  CHECK(panel.n_units() == 2);
  CHECK(panel.n_periods() == 3);
  CHECK(panel.unit_id(0) == "a");
  CHECK(panel.time_id(0) == "1");
  CHECK(panel.row(0)[1] == 1.5);  // times sorted numerically
  CHECK(panel.row(1)[2] == 3.0);

  SUBCASE("missing cell names the unit") {
    const std::string bad = write_file("unbalanced.csv",
                                       "unit,time,value\n"
                                       "a,1,1.0\na,2,2.0\nb,1,3.0\n");
    try {
      read_long_csv(bad);
      FAIL("expected UnbalancedPanel");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::unbalanced_panel);
      CHECK(std::string(e.what()).find("b") != std::string::npos);
    }
  }
  SUBCASE("bad value reports the row number") {
    const std::string bad = write_file("badvalue.csv",
                                       "unit,time,value\n"
                                       "a,1,1.0\na,2,abc\nb,1,3.0\nb,2,4.0\n");
    try {
      read_long_csv(bad);
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::parse_error);
      CHECK(std::string(e.what()).find("row 3") != std::string::npos);
    }
  }
  SUBCASE("duplicate key") {
    const std::string bad = write_file("dup.csv",
                                       "unit,time,value\n"
                                       "a,1,1.0\na,1,2.0\n");
    try {
      read_long_csv(bad);
      FAIL("expected DuplicateKey");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::duplicate_key);
    }
  }
  SUBCASE("missing column") {
    const std::string bad = write_file("nocol.csv", "unit,value\na,1\n");
    CHECK_THROWS_AS(read_long_csv(bad), Error);
  }
  SUBCASE("quoted fields and custom columns") {
    const std::string fancy = write_file("fancy.csv",
                                         "city,quarter,price\n"
                                         "\"x,1\",1990Q1,0.5\n"
                                         "\"x,1\",1990Q2,0.75\n");
    ColumnMapping cols{"city", "quarter", "price"};
    const Panel p = read_long_csv(fancy, cols);
    CHECK(p.n_units() == 1);
    CHECK(p.unit_id(0) == "x,1");
    CHECK(p.time_id(1) == "1990Q2");
  }
}

TEST_CASE("panel round trip preserves unit stats exactly") {
  DgpConfig config;
  const auto params = sample_unit_params(config, 12, rng::derive_key(5, {50}));
  const Panel panel = simulate_panel(params, 16, rng::derive_key(5, {51}));
  const auto path = (temp_dir() / "roundtrip.csv").string();
  write_long_csv(panel, path);
  const Panel re = read_long_csv(path);
  REQUIRE(re.n_units() == panel.n_units());
  REQUIRE(re.n_periods() == panel.n_periods());
  const auto s1 = compute_unit_stats(panel, 1);
  const auto s2 = compute_unit_stats(re, 1);
  for (std::size_t i = 0; i < s1.size(); ++i) {
    CHECK(s1[i].mu_hat == s2[i].mu_hat);
    CHECK(s1[i].gamma_hat == s2[i].gamma_hat);
    CHECK(s1[i].rho_hat == s2[i].rho_hat);
  }
}

TEST_CASE("key-value config parsing") {
  const std::string path = write_file("study.cfg",
                                      "# comment\n"
                                      "n = 250, 1000\n"
                                      "t = 12\n"
                                      "replications = 100\n"
                                      "seed = 42\n"
                                      "level = 0.9\n"
                                      "stats = mean:rho1, mean:gamma0\n");
  const auto cfg = KeyValueConfig::load(path);
  CHECK(cfg.get_size_list("n") == std::vector<std::size_t>{250, 1000});
  CHECK(cfg.get_u64("seed", 0) == 42);
  CHECK(cfg.get_double("level", 0.95) == 0.9);
  CHECK(cfg.get_double("missing", 0.5) == 0.5);
  CHECK(cfg.get_string_list("stats").size() == 2);
  CHECK_THROWS_AS(cfg.require("absent"), Error);

  const std::string bad = write_file("bad.cfg", "n 250\n");
  CHECK_THROWS_AS(KeyValueConfig::load(bad), Error);
  const std::string dup = write_file("dup.cfg", "n = 1\nn = 2\n");
  CHECK_THROWS_AS(KeyValueConfig::load(dup), Error);
}

TEST_CASE("json writer format") {
  ordered_json j;
  j["b_first"] = 0.1;
  j["a_second"] = ordered_json::array({1, 2.5, "x"});
  j["nested"]["flag"] = true;
  j["nothing"] = nullptr;
  const std::string text = dump_json(j, 2);
  // insertion order kept, floats at 17 significant digits
  CHECK(text.find("\"b_first\": 0.10000000000000001") != std::string::npos);
  CHECK(text.find("2.5") != std::string::npos);
  CHECK(text.find("\"nothing\": null") != std::string::npos);
  CHECK(text.find("b_first") < text.find("a_second"));
}

TEST_CASE("analyze pipeline end to end") {
  DgpConfig config;
  const auto params = sample_unit_params(config, 30, rng::derive_key(8, {60}));
  const Panel panel = simulate_panel(params, 24, rng::derive_key(8, {61}));
  const auto path = (temp_dir() / "analyze_input.csv").string();
  write_long_csv(panel, path);

  AnalyzeOptions options;
  options.input_path = path;
  options.bootstrap_draws = 50;
  options.seed = 9;

  const AnalysisReport report = run_analyze(options);
  CHECK(report.n_units == 30);
  CHECK(report.n_periods == 24);
  CHECK(report.statistics.size() == 18);
  CHECK(report.toj_available);

  const auto j = report.to_json();
  CHECK(j["schema"] == "hetpanel/analysis-report/v1");
  CHECK(j["statistics"].size() == 18);
  for (const auto& block : j["statistics"]) {
    CHECK(block.contains("ed"));
    CHECK(block.contains("ci_lower"));
    CHECK(block["estimator_kind"] == "hpj");
  }

  const std::string text = report.to_text();
  CHECK(text.find("mean:mu") != std::string::npos);
  CHECK(text.find("95% CI") != std::string::npos);
  CHECK(text.find("TOJ") != std::string::npos);

  SUBCASE("same seed gives byte-identical JSON") {
    const AnalysisReport again = run_analyze(options);
    CHECK(dump_json(again.to_json()) == dump_json(report.to_json()));
  }

  SUBCASE("quantile blocks carry the non-smooth flags") {
    for (const auto& block : report.statistics) {
      if (block.spec.is_quantile()) {
        REQUIRE(block.flags.size() >= 2);
        CHECK(block.flags[0] == "nonsmooth_quantile");
        CHECK(block.flags[1] == "ci_theory_light");
      }
    }
  }

  SUBCASE("corr with one unit propagates InsufficientUnits") {
    std::vector<double> row(24);
    for (std::size_t t = 0; t < row.size(); ++t) row[t] = 0.1 * static_cast<double>(t % 5);
    const Panel single(row, 1, 24);
    const auto single_path = (temp_dir() / "single.csv").string();
    write_long_csv(single, single_path);
    AnalyzeOptions o = options;
    o.input_path = single_path;
    o.stat_selectors = {"corr:mu,gamma0"};
    try {
      run_analyze(o);
      FAIL("expected InsufficientUnits");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::insufficient_units);
      CHECK(exit_code_for(e.code()) == 2);
    }
  }

  SUBCASE("short panel disables toj") {
    AnalyzeOptions o = options;
    std::vector<double> vals;
    rng::Stream stream(rng::derive_key(4, {1}));
    for (int i = 0; i < 5 * 7; ++i) vals.push_back(stream.next_gaussian());
    const Panel tiny(vals, 5, 7);
    const auto tiny_path = (temp_dir() / "tiny.csv").string();
    write_long_csv(tiny, tiny_path);
    o.input_path = tiny_path;
    o.stat_selectors = {"mean:mu"};
    const auto r = run_analyze(o);
    CHECK_FALSE(r.toj_available);
    CHECK_FALSE(r.statistics[0].toj.has_value());
    CHECK(r.to_json()["statistics"][0]["toj"].is_null());
  }
}

TEST_CASE("kstest pipeline") {
  DgpConfig config;
  const auto params_a = sample_unit_params(config, 25, rng::derive_key(12, {1}));
  const Panel panel_a = simulate_panel(params_a, 20, rng::derive_key(12, {2}));
  const auto path_a = (temp_dir() / "ks_a.csv").string();
  write_long_csv(panel_a, path_a);

  KsOptions options;
  options.input_a = path_a;
  options.input_b = path_a;
  options.quantity = {QuantityRef::Kind::rho, 1};

  SUBCASE("identical files give statistic 0 and p = 1") {
    const KsReport r = run_kstest(options);
    CHECK(r.result.statistic == 0.0);
    CHECK(r.result.p_value == 1.0);
    const auto j = r.to_json();
    CHECK(j["schema"] == "hetpanel/ks-result/v1");
    CHECK(j["p_value"] == 1.0);
  }

  SUBCASE("disjoint rho supports give p near 0") {
    // shift group B to much higher persistence
    DgpConfig persistent = config;
    persistent.mean_vec = {-1.0, 1.5, 0.9};
    persistent.cov = {1.0,   0.14,  -0.006,  //
                      0.14,  0.49,  0.0056,  //
                      -0.006, 0.0056, 0.0004};
    const auto params_b = sample_unit_params(persistent, 25, rng::derive_key(13, {1}));
    const Panel panel_b = simulate_panel(params_b, 2000, rng::derive_key(13, {2}));
    const auto path_b = (temp_dir() / "ks_b.csv").string();
    write_long_csv(panel_b, path_b);
    KsOptions o = options;
    o.input_b = path_b;
    const KsReport r = run_kstest(o);
    CHECK(r.result.p_value < 0.01);
    CHECK(r.result.raw_sup > 0.8);
  }
}

TEST_CASE("simulate pipeline writes csv and json") {
  const std::string cfg_path = write_file("sim.cfg",
                                          "n = 40\n"
                                          "t = 12\n"
                                          "replications = 6\n"
                                          "seed = 11\n"
                                          "bootstrap_b = 25\n"
                                          "stats = mean:rho1,mean:gamma0\n"
                                          "oracle_draws = 20000\n");
  SimulateOptions options;
  options.config_path = cfg_path;
  const SimulateReport report = run_simulate(options);
  CHECK(report.table.rows.size() == 6);

  const auto j = report.to_json();
  CHECK(j["schema"] == "hetpanel/study-table/v1");
  CHECK(j["rows"].size() == 6);
  CHECK(j["config"]["seed"] == 11);

  const auto csv_path = (temp_dir() / "study.csv").string();
  write_study_csv(report.table, csv_path);
  const std::string text = slurp(csv_path);
  CHECK(text.find("statistic,estimator,n,t,true,bias,rmse,cp,failed_replications") == 0);
  CHECK(text.find("mean:rho1,ed,40,12,") != std::string::npos);

  SUBCASE("flag overrides beat config values") {
    SimulateOptions o = options;
    o.seed = 99;
    const auto r = run_simulate(o);
    CHECK(r.config_echo["seed"] == 99);
  }

  SUBCASE("invalid covariance raises ConfigError") {
    const std::string bad = write_file("sim_bad.cfg",
                                       "n = 10\nt = 8\nreplications = 2\n"
                                       "cov = 1,0,0,0,-2,0,0,0,1\n");
    SimulateOptions o;
    o.config_path = bad;
    try {
      run_simulate(o);
      FAIL("expected ConfigError");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::config_error);
      CHECK(exit_code_for(e.code()) == 3);
    }
  }

  SUBCASE("missing required keys raise ConfigError") {
    const std::string bad = write_file("sim_missing.cfg", "n = 10\n");
    SimulateOptions o;
    o.config_path = bad;
    CHECK_THROWS_AS(run_simulate(o), Error);
  }
}
