#include "hetpanel/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hetpanel/config.hpp"
#include "hetpanel/errors.hpp"

namespace hetpanel {

namespace {

constexpr const char* kAnalysisSchema = "hetpanel/analysis-report/v1";
constexpr const char* kKsSchema = "hetpanel/ks-result/v1";
constexpr const char* kStudySchema = "hetpanel/study-table/v1";

std::vector<StatisticSpec> resolve_specs(const std::vector<std::string>& selectors,
                                         std::size_t max_lag) {
  std::vector<StatisticSpec> specs;
  if (selectors.empty()) {
    specs = default_statistic_menu();
  } else {
    for (const auto& sel : selectors) specs.push_back(StatisticSpec::parse(sel));
  }
  for (const auto& spec : specs)
    if (spec.max_lag() > max_lag)
      raise(Errc::config_error, "statistic '" + spec.name() + "' needs max_lag >= " +
                                    std::to_string(spec.max_lag()));
  return specs;
}

ConfidenceInterval to_interval(const BootstrapResult& r) {
  ConfidenceInterval ci;
  ci.lower = r.ci_lower;
  ci.upper = r.ci_upper;
  ci.missing_draws = r.missing_draws;
  ci.unreliable = r.unreliable;
  return ci;
}

ordered_json interval_json(const ConfidenceInterval& ci, EstimatorKind kind) {
  ordered_json j;
  j["estimator_kind"] = estimator_name(kind);
  j["lower"] = ci.lower;
  j["upper"] = ci.upper;
  j["missing_draws"] = static_cast<std::uint64_t>(ci.missing_draws);
  j["unreliable"] = ci.unreliable;
  return j;
}

std::string format_fixed(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%10.5f", v);
  return buf;
}

}  // namespace

AnalysisReport analyze_panel(const Panel& panel, const AnalyzeOptions& options) {
  if (options.max_lag == 0) raise(Errc::config_error, "max_lag must be at least 1");
  if (options.max_lag >= panel.n_periods())
    raise(Errc::invalid_lag, "max_lag must be below T");
  const std::vector<StatisticSpec> specs = resolve_specs(options.stat_selectors, options.max_lag);

  // Thirds are kept only when every third-subpanel can carry max_lag.
  const bool toj_ok =
      panel.n_periods() >= 6 && panel.n_periods() / 3 >= options.max_lag + 2;
  const JackknifeOrder order =
      toj_ok ? JackknifeOrder::thirds_and_half : JackknifeOrder::half;
  if (options.ci_estimator == EstimatorKind::toj && !toj_ok)
    raise(Errc::panel_too_short, "panel is too short for toj-centered intervals");

  const JackknifeBundle bundle = build_bundle(panel, options.max_lag, order);

  std::vector<EstimatorKind> estimators{EstimatorKind::ed, EstimatorKind::hpj};
  if (toj_ok) estimators.push_back(EstimatorKind::toj);

  BootstrapConfig boot;
  boot.draws = options.bootstrap_draws;
  boot.seed = options.seed;
  boot.level = options.level;
  const auto matrix = bootstrap_matrix(bundle, specs, estimators, boot);

  AnalysisReport report;
  report.input_path = options.input_path;
  report.n_units = panel.n_units();
  report.n_periods = panel.n_periods();
  report.max_lag = options.max_lag;
  report.seed = options.seed;
  report.bootstrap_draws = options.bootstrap_draws;
  report.level = options.level;
  report.ci_estimator = options.ci_estimator;
  report.dropped_units = bundle.degenerate_count();
  report.toj_available = toj_ok;

  for (std::size_t s = 0; s < specs.size(); ++s) {
    const CorrectedEstimate est = evaluate_corrected(bundle, specs[s]);
    StatisticBlock block;
    block.spec = specs[s];
    block.ed = est.ed;
    block.hpj = est.hpj;
    block.toj = est.toj;
    block.n_units_used = est.n_units_used;
    block.degenerate_units_dropped = est.degenerate_units_dropped;
    block.estimator_kind = options.ci_estimator;

    block.ci_ed = to_interval(matrix[s][0]);
    block.ci_hpj = to_interval(matrix[s][1]);
    if (toj_ok) block.ci_toj = to_interval(matrix[s][2]);
    switch (options.ci_estimator) {
      case EstimatorKind::ed: block.ci = *block.ci_ed; break;
      case EstimatorKind::hpj: block.ci = *block.ci_hpj; break;
      case EstimatorKind::toj: block.ci = *block.ci_toj; break;
    }

    if (specs[s].nonsmooth()) {
      block.flags.push_back("nonsmooth_quantile");
      block.flags.push_back("ci_theory_light");
    }
    if (!toj_ok) block.flags.push_back("toj_unavailable");
    bool unreliable = block.ci.unreliable;
    if (block.ci_ed && block.ci_ed->unreliable) unreliable = true;
    if (block.ci_hpj && block.ci_hpj->unreliable) unreliable = true;
    if (block.ci_toj && block.ci_toj->unreliable) unreliable = true;
    if (unreliable) block.flags.push_back("bootstrap_unreliable");
    report.statistics.push_back(std::move(block));
  }
  return report;
}

AnalysisReport run_analyze(const AnalyzeOptions& options) {
  const Panel panel = read_long_csv(options.input_path, options.columns);
  return analyze_panel(panel, options);
}

ordered_json AnalysisReport::to_json() const {
  ordered_json j;
  j["schema"] = kAnalysisSchema;
  ordered_json meta;
  meta["input"] = input_path;
  meta["n_units"] = static_cast<std::uint64_t>(n_units);
  meta["n_periods"] = static_cast<std::uint64_t>(n_periods);
  meta["max_lag"] = static_cast<std::uint64_t>(max_lag);
  meta["seed"] = seed;
  meta["bootstrap_draws"] = static_cast<std::uint64_t>(bootstrap_draws);
  meta["level"] = level;
  meta["ci_estimator"] = estimator_name(ci_estimator);
  meta["dropped_units"] = static_cast<std::uint64_t>(dropped_units);
  meta["toj_available"] = toj_available;
  meta["toj_weights_note"] = kTojWeightsNote;
  j["metadata"] = std::move(meta);

  ordered_json stats = ordered_json::array();
  for (const StatisticBlock& b : statistics) {
    ordered_json s;
    s["target"] = b.spec.name();
    s["ed"] = b.ed;
    s["hpj"] = b.hpj;
    if (b.toj) s["toj"] = *b.toj; else s["toj"] = nullptr;
    s["estimator_kind"] = estimator_name(b.estimator_kind);
    s["ci_lower"] = b.ci.lower;
    s["ci_upper"] = b.ci.upper;
    ordered_json cis;
    cis["ed"] = b.ci_ed ? interval_json(*b.ci_ed, EstimatorKind::ed) : ordered_json(nullptr);
    cis["hpj"] = b.ci_hpj ? interval_json(*b.ci_hpj, EstimatorKind::hpj) : ordered_json(nullptr);
    cis["toj"] = b.ci_toj ? interval_json(*b.ci_toj, EstimatorKind::toj) : ordered_json(nullptr);
    s["cis"] = std::move(cis);
    s["n_units_used"] = static_cast<std::uint64_t>(b.n_units_used);
    s["degenerate_units_dropped"] = static_cast<std::uint64_t>(b.degenerate_units_dropped);
    ordered_json flags = ordered_json::array();
    for (const auto& f : b.flags) flags.push_back(f);
    s["flags"] = std::move(flags);
    stats.push_back(std::move(s));
  }
  j["statistics"] = std::move(stats);
  return j;
}

std::string AnalysisReport::to_text() const {
  std::ostringstream out;
  out << "Heterogeneous panel analysis: N=" << n_units << ", T=" << n_periods
      << ", max lag " << max_lag << "\n";
  out << "Bootstrap: B=" << bootstrap_draws << ", level " << level << ", seed " << seed
      << "; headline CI centered on " << estimator_name(ci_estimator) << "\n";
  if (dropped_units > 0)
    out << "Units dropped from rho-based statistics (zero variance): " << dropped_units << "\n";
  if (!toj_available) out << "TOJ unavailable: panel too short for third subpanels\n";
  out << "\n";

  char ci_label[24];
  std::snprintf(ci_label, sizeof(ci_label), "  %.4g%% CI [", level * 100.0);
  auto ci_text = [&ci_label](const std::optional<ConfidenceInterval>& ci) {
    if (!ci) return std::string("         [toj unavailable]");
    std::string s = ci_label;
    s += format_fixed(ci->lower);
    s += ",";
    s += format_fixed(ci->upper);
    s += " ]";
    return s;
  };

  for (const StatisticBlock& b : statistics) {
    out << b.spec.name();
    if (!b.flags.empty()) {
      out << "  (";
      for (std::size_t i = 0; i < b.flags.size(); ++i) out << (i ? ", " : "") << b.flags[i];
      out << ")";
    }
    out << "\n";
    out << "  ED  " << format_fixed(b.ed) << "\n" << ci_text(b.ci_ed) << "\n";
    out << "  HPJ " << format_fixed(b.hpj) << "\n" << ci_text(b.ci_hpj) << "\n";
    if (b.toj)
      out << "  TOJ " << format_fixed(*b.toj) << "\n" << ci_text(b.ci_toj) << "\n";
    out << "\n";
  }
  return out.str();
}

KsReport run_kstest(const KsOptions& options) {
  const Panel panel_a = read_long_csv(options.input_a, options.columns);
  const Panel panel_b = read_long_csv(options.input_b, options.columns);
  const std::size_t lag = options.quantity.kind == QuantityRef::Kind::mu
                              ? 0
                              : std::max<std::size_t>(options.quantity.lag, 0);

  auto estimates = [&](const Panel& panel, std::size_t& dropped) {
    const auto stats = compute_unit_stats(panel, lag);
    std::vector<double> col = detail::extract_column(stats, options.quantity);
    if (options.quantity.rho_based()) {
      std::vector<double> kept;
      kept.reserve(col.size());
      for (std::size_t i = 0; i < col.size(); ++i) {
        if (stats[i].degenerate) ++dropped;
        else kept.push_back(col[i]);
      }
      return kept;
    }
    return col;
  };

  KsReport report;
  report.input_a = options.input_a;
  report.input_b = options.input_b;
  report.quantity = options.quantity;
  const auto a = estimates(panel_a, report.dropped_a);
  const auto b = estimates(panel_b, report.dropped_b);
  if (a.empty() || b.empty())
    raise(Errc::insufficient_units, "kstest: a group has no usable units");
  report.result = ks_two_sample(a, b);
  return report;
}

ordered_json KsReport::to_json() const {
  ordered_json j;
  j["schema"] = kKsSchema;
  j["quantity"] = quantity.name();
  j["statistic"] = result.statistic;
  j["raw_sup"] = result.raw_sup;
  j["p_value"] = result.p_value;
  j["n1"] = static_cast<std::uint64_t>(result.n1);
  j["n2"] = static_cast<std::uint64_t>(result.n2);
  ordered_json meta;
  meta["input_a"] = input_a;
  meta["input_b"] = input_b;
  meta["dropped_a"] = static_cast<std::uint64_t>(dropped_a);
  meta["dropped_b"] = static_cast<std::uint64_t>(dropped_b);
  j["metadata"] = std::move(meta);
  return j;
}

ordered_json study_table_to_json(const StudyTable& table) {
  ordered_json rows = ordered_json::array();
  for (const StudyRow& r : table.rows) {
    ordered_json row;
    row["statistic"] = r.statistic;
    row["estimator"] = estimator_name(r.estimator);
    row["n"] = static_cast<std::uint64_t>(r.n_units);
    row["t"] = static_cast<std::uint64_t>(r.n_periods);
    row["true"] = r.true_value;
    row["bias"] = r.bias;
    row["rmse"] = r.rmse;
    row["cp"] = r.cp ? ordered_json(*r.cp) : ordered_json(nullptr);
    row["failed_replications"] = static_cast<std::uint64_t>(r.failed_replications);
    rows.push_back(std::move(row));
  }
  return rows;
}

SimulateReport run_simulate(const SimulateOptions& options) {
  const KeyValueConfig cfg = KeyValueConfig::load(options.config_path);
  for (const char* key : {"n", "t", "replications"}) cfg.require(key);

  DgpConfig dgp;
  const auto mean = cfg.get_double_list("mean");
  if (!mean.empty()) {
    if (mean.size() != 3) raise(Errc::config_error, "config key 'mean' needs 3 numbers");
    std::copy(mean.begin(), mean.end(), dgp.mean_vec.begin());
  }
  const auto cov = cfg.get_double_list("cov");
  if (!cov.empty()) {
    if (cov.size() != 9) raise(Errc::config_error, "config key 'cov' needs 9 numbers (row-major 3x3)");
    std::copy(cov.begin(), cov.end(), dgp.cov.begin());
  }
  dgp.seed = options.seed.value_or(cfg.get_u64("seed", 1));
  dgp.replications = cfg.get_size("replications", 1000);

  const auto n_list = cfg.get_size_list("n");
  const auto t_list = cfg.get_size_list("t");
  if (n_list.empty() || t_list.empty())
    raise(Errc::config_error, "config keys 'n' and 't' must list at least one value");

  StudyOptions study;
  const std::vector<std::string> selectors = options.stat_selectors
                                                 ? *options.stat_selectors
                                                 : cfg.get_string_list("stats");
  if (selectors.empty()) {
    study.specs = default_statistic_menu();
  } else {
    for (const auto& sel : selectors) study.specs.push_back(StatisticSpec::parse(sel));
  }
  const std::vector<std::string> estimator_names = options.estimator_names
                                                       ? *options.estimator_names
                                                       : cfg.get_string_list("estimators");
  if (!estimator_names.empty()) {
    study.estimators.clear();
    for (const auto& name : estimator_names) study.estimators.push_back(parse_estimator(name));
  }
  for (const auto& sel : cfg.get_string_list("ci_stats"))
    study.ci_specs.push_back(StatisticSpec::parse(sel));
  study.bootstrap.draws = options.bootstrap_draws.value_or(cfg.get_size("bootstrap_b", 1000));
  study.bootstrap.level = options.level.value_or(cfg.get_double("level", 0.95));
  study.oracle_draws = cfg.get_size("oracle_draws", 1'000'000);

  // The population truth does not depend on N or T; compute it once.
  study.true_values = true_parameter_oracle(dgp, study.specs, study.oracle_draws);

  SimulateReport report;
  for (std::size_t n : n_list) {
    for (std::size_t t : t_list) {
      DgpConfig cell = dgp;
      cell.n_units = n;
      cell.n_periods = t;
      StudyTable part = run_study(cell, study);
      for (auto& row : part.rows) report.table.rows.push_back(std::move(row));
    }
  }

  ordered_json echo;
  echo["config_path"] = options.config_path;
  echo["seed"] = dgp.seed;
  echo["replications"] = static_cast<std::uint64_t>(dgp.replications);
  echo["bootstrap_draws"] = static_cast<std::uint64_t>(study.bootstrap.draws);
  echo["level"] = study.bootstrap.level;
  echo["oracle_draws"] = static_cast<std::uint64_t>(study.oracle_draws);
  ordered_json mean_json = ordered_json::array();
  for (double m : dgp.mean_vec) mean_json.push_back(m);
  echo["mean"] = std::move(mean_json);
  ordered_json cov_json = ordered_json::array();
  for (double c : dgp.cov) cov_json.push_back(c);
  echo["cov"] = std::move(cov_json);
  ordered_json n_json = ordered_json::array();
  for (std::size_t n : n_list) n_json.push_back(static_cast<std::uint64_t>(n));
  echo["n"] = std::move(n_json);
  ordered_json t_json = ordered_json::array();
  for (std::size_t t : t_list) t_json.push_back(static_cast<std::uint64_t>(t));
  echo["t"] = std::move(t_json);
  ordered_json stats_json = ordered_json::array();
  for (const auto& spec : study.specs) stats_json.push_back(spec.name());
  echo["stats"] = std::move(stats_json);
  ordered_json est_json = ordered_json::array();
  for (EstimatorKind e : study.estimators) est_json.push_back(estimator_name(e));
  echo["estimators"] = std::move(est_json);
  echo["toj_weights_note"] = kTojWeightsNote;
  report.config_echo = std::move(echo);
  return report;
}

ordered_json SimulateReport::to_json() const {
  ordered_json j;
  j["schema"] = kStudySchema;
  j["config"] = config_echo;
  j["rows"] = study_table_to_json(table);
  return j;
}

}  // namespace hetpanel
