// Criteria 9-10: command-line determinism across thread counts and the
// synthetic full-size fixture through the analyze/kstest paths.

#include "acceptance.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "schema_check.hpp"

#ifndef HETPANEL_BIN
#error "HETPANEL_BIN must point at the hetpanel executable"
#endif
#ifndef FIXTURE_BIN
#error "FIXTURE_BIN must point at the make_lop_fixture executable"
#endif
#ifndef SCHEMA_DIR
#error "SCHEMA_DIR must point at the shipped schemas"
#endif

namespace acceptance {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path work_dir() {
  const fs::path dir = fs::current_path() / "acceptance_work";
  fs::create_directories(dir);
  return dir;
}

int run_command(const std::string& command) { return std::system(command.c_str()); }

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json load_json(const fs::path& path) { return json::parse(slurp(path)); }

json load_schema(const char* name) { return load_json(fs::path(SCHEMA_DIR) / name); }

std::string quoted(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

bool criterion_determinism(std::string& summary) {
  Timer timer;
  Tally tally;
  const fs::path dir = work_dir() / "determinism";
  fs::create_directories(dir);

  // mid-size fixture: determinism does not need the full-size panel
  tally.expect(run_command(quoted(FIXTURE_BIN) + " --out-dir " + quoted(dir) +
                           " --items 12 --cities 10 --periods 36 --goods-items 6 --seed 5 " +
                           "2> /dev/null") == 0,
               "fixture generation failed");

  const std::string threads[] = {"1", "4", "16"};
  std::vector<std::string> analyze_bytes, study_bytes;
  for (const std::string& t : threads) {
    const fs::path report = dir / ("report_t" + t + ".json");
    const std::string analyze_cmd =
        "HETPANEL_THREADS=" + t + " " + quoted(HETPANEL_BIN) + " analyze --input " +
        quoted(dir / "lop_panel.csv") + " --bootstrap-b 500 --seed 2718 --out " +
        quoted(report) + " > /dev/null 2>&1";
    tally.expect(run_command(analyze_cmd) == 0, "analyze failed with " + t + " thread(s)");
    analyze_bytes.push_back(slurp(report));

    std::ofstream cfg(dir / "study.cfg");
    cfg << "n = 50\nt = 12\nreplications = 25\nseed = 99\nbootstrap_b = 100\n"
        << "stats = mean:rho1,mean:gamma0\noracle_draws = 100000\n";
    cfg.close();
    const fs::path base = dir / ("study_t" + t);
    const std::string sim_cmd = "HETPANEL_THREADS=" + t + " " + quoted(HETPANEL_BIN) +
                                " simulate --config " + quoted(dir / "study.cfg") + " --out " +
                                quoted(base) + " > /dev/null 2>&1";
    tally.expect(run_command(sim_cmd) == 0, "simulate failed with " + t + " thread(s)");
    study_bytes.push_back(slurp(fs::path(base.string() + ".json")) +
                          slurp(fs::path(base.string() + ".csv")));
  }
  tally.expect(!analyze_bytes[0].empty(), "analyze report is empty");
  tally.expect(analyze_bytes[0] == analyze_bytes[1] && analyze_bytes[1] == analyze_bytes[2],
               "analyze reports differ across 1/4/16 threads");
  tally.expect(!study_bytes[0].empty(), "study output is empty");
  tally.expect(study_bytes[0] == study_bytes[1] && study_bytes[1] == study_bytes[2],
               "study outputs differ across 1/4/16 threads");

  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "analyze and simulate outputs byte-identical across 1/4/16 threads (%.1f s)",
                timer.seconds());
  summary = buf;
  return tally.pass();
}

bool criterion_cli_fixture(std::string& summary) {
  Timer timer;
  Tally tally;
  const fs::path dir = work_dir() / "lop";
  fs::create_directories(dir);

  tally.expect(run_command(quoted(FIXTURE_BIN) + " --out-dir " + quoted(dir) +
                           " --seed 20070131 2> /dev/null") == 0,
               "full-size fixture generation failed");

  const fs::path report_path = dir / "report.json";
  const std::string analyze_cmd = quoted(HETPANEL_BIN) + " analyze --input " +
                                  quoted(dir / "lop_panel.csv") +
                                  " --bootstrap-b 300 --seed 11 --out " + quoted(report_path) +
                                  " > " + quoted(dir / "report.txt") + " 2> /dev/null";
  tally.expect(run_command(analyze_cmd) == 0, "analyze on the fixture failed");

  // the validator must actually catch structural damage
  json broken = load_json(report_path);
  broken.erase("metadata");
  broken["statistics"][0]["ed"] = "not-a-number";
  tally.expect(!schema_check::validate(broken, load_schema("analysis_report.schema.json")).empty(),
               "schema validator accepted a broken report");

  const json report = load_json(report_path);
  const auto report_errors = schema_check::validate(report, load_schema("analysis_report.schema.json"));
  for (const auto& e : report_errors) tally.expect(false, "analysis schema: " + e);
  tally.expect(report["metadata"]["n_units"] == 2448, "fixture should have N = 2448");
  tally.expect(report["metadata"]["n_periods"] == 72, "fixture should have T = 72");
  tally.expect(report["statistics"].size() == 18, "default menu should yield 18 blocks");

  const fs::path ks_path = dir / "ks.json";
  const std::string ks_cmd = quoted(HETPANEL_BIN) + " kstest --input-a " +
                             quoted(dir / "lop_goods.csv") + " --input-b " +
                             quoted(dir / "lop_services.csv") +
                             " --quantity rho --lag 1 --out " + quoted(ks_path) +
                             " > /dev/null 2> /dev/null";
  tally.expect(run_command(ks_cmd) == 0, "kstest on the fixture failed");
  const json ks = load_json(ks_path);
  const auto ks_errors = schema_check::validate(ks, load_schema("ks_result.schema.json"));
  for (const auto& e : ks_errors) tally.expect(false, "ks schema: " + e);
  tally.expect(ks["n1"] == 1428 && ks["n2"] == 1020, "group sizes should be 1428/1020");
  tally.expect(ks["statistic"].get<double>() > 0.0, "ks statistic should be positive");
  // goods and services are generated with different persistence
  tally.expect(ks["p_value"].get<double>() < 0.01,
               "ks p-value should reject equality on the fixture");

  // exit-code discipline: input errors map to 2, config errors to 3
  const int missing_input = run_command(quoted(HETPANEL_BIN) + " analyze --input " +
                                        quoted(dir / "no_such_file.csv") +
                                        " > /dev/null 2> /dev/null");
  tally.expect(WIFEXITED(missing_input) && WEXITSTATUS(missing_input) == 2,
               "missing input should exit with code 2");
  const int bad_config = run_command(quoted(HETPANEL_BIN) + " simulate --config " +
                                     quoted(dir / "no_such_config.cfg") +
                                     " > /dev/null 2> /dev/null");
  tally.expect(WIFEXITED(bad_config) && WEXITSTATUS(bad_config) == 3,
               "missing config should exit with code 3");

  const double statistic = ks["statistic"].get<double>();
  const double p_value = ks["p_value"].get<double>();
  char buf[240];
  std::snprintf(buf, sizeof(buf),
                "N=2448, T=72 fixture: analyze (18 blocks) and kstest (KS2 %.3f, p %.2g) "
                "produce schema-valid output (%.1f s)",
                statistic, p_value, timer.seconds());
  summary = buf;
  return tally.pass();
}

}  // namespace acceptance
