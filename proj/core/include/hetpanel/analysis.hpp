#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hetpanel/bootstrap.hpp"
#include "hetpanel/csv.hpp"
#include "hetpanel/json_writer.hpp"
#include "hetpanel/kstest.hpp"
#include "hetpanel/montecarlo.hpp"
#include "hetpanel/panel.hpp"
#include "hetpanel/statistics.hpp"

namespace hetpanel {

inline constexpr const char* kTojWeightsNote =
    "third-order jackknife uses split-panel weights (3, -3, 1) over full, half and third subpanels";

struct AnalyzeOptions {
  std::string input_path;
  ColumnMapping columns;
  std::vector<std::string> stat_selectors;  // empty selects the default menu
  EstimatorKind ci_estimator = EstimatorKind::hpj;
  std::size_t bootstrap_draws = 1000;
  std::uint64_t seed = 1;
  double level = 0.95;
  std::size_t max_lag = 1;
};

struct ConfidenceInterval {
  double lower = 0.0;
  double upper = 0.0;
  std::size_t missing_draws = 0;
  bool unreliable = false;
};

/// One reported statistic: all three point estimates plus bootstrap CIs.
/// The headline CI (ci_lower/ci_upper) is centered on estimator_kind.
struct StatisticBlock {
  StatisticSpec spec;
  double ed = 0.0;
  double hpj = 0.0;
  std::optional<double> toj;
  EstimatorKind estimator_kind = EstimatorKind::hpj;
  ConfidenceInterval ci;  // for estimator_kind
  std::optional<ConfidenceInterval> ci_ed;
  std::optional<ConfidenceInterval> ci_hpj;
  std::optional<ConfidenceInterval> ci_toj;
  std::size_t n_units_used = 0;
  std::size_t degenerate_units_dropped = 0;
  std::vector<std::string> flags;
};

struct AnalysisReport {
  std::string input_path;
  std::size_t n_units = 0;
  std::size_t n_periods = 0;
  std::size_t max_lag = 1;
  std::uint64_t seed = 1;
  std::size_t bootstrap_draws = 1000;
  double level = 0.95;
  EstimatorKind ci_estimator = EstimatorKind::hpj;
  std::size_t dropped_units = 0;
  bool toj_available = true;
  std::vector<StatisticBlock> statistics;

  ordered_json to_json() const;
  std::string to_text() const;
};

/// Core analyze pipeline on an in-memory panel.
AnalysisReport analyze_panel(const Panel& panel, const AnalyzeOptions& options);

/// Full analyze command: ingest CSV, run the pipeline.
AnalysisReport run_analyze(const AnalyzeOptions& options);

struct KsOptions {
  std::string input_a;
  std::string input_b;
  ColumnMapping columns;
  QuantityRef quantity{QuantityRef::Kind::rho, 1};
};

struct KsReport {
  std::string input_a;
  std::string input_b;
  QuantityRef quantity;
  KsResult result;
  std::size_t dropped_a = 0;
  std::size_t dropped_b = 0;

  ordered_json to_json() const;
};

KsReport run_kstest(const KsOptions& options);

struct SimulateOptions {
  std::string config_path;
  // Flag overrides; unset fields defer to the config file.
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> bootstrap_draws;
  std::optional<double> level;
  std::optional<std::vector<std::string>> stat_selectors;
  std::optional<std::vector<std::string>> estimator_names;
};

struct SimulateReport {
  StudyTable table;
  ordered_json config_echo;

  ordered_json to_json() const;
};

SimulateReport run_simulate(const SimulateOptions& options);

ordered_json study_table_to_json(const StudyTable& table);

}  // namespace hetpanel
