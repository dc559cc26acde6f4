#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hetpanel/bootstrap.hpp"
#include "hetpanel/panel.hpp"
#include "hetpanel/statistics.hpp"

namespace hetpanel {

/// Heterogeneous AR(1) simulation design. Unit parameters
/// (mean ς, stationary variance σ², AR coefficient φ) come from a trivariate
/// normal truncated jointly to σ² > 0 and |φ| < 1.
struct DgpConfig {
  std::array<double, 3> mean_vec{-1.0, 1.5, 0.4};
  // Row-major covariance; std devs (1, 0.7, 0.2), correlations
  // corr(ς,σ²) = 0.2, corr(ς,φ) = 0.4, corr(σ²,φ) = -0.3.
  std::array<double, 9> cov{1.0,  0.14,   0.08,    //
                            0.14, 0.49,   -0.042,  //
                            0.08, -0.042, 0.04};
  std::size_t n_units = 250;
  std::size_t n_periods = 12;
  std::size_t replications = 1000;
  std::uint64_t seed = 1;
};

struct UnitParams {
  double mean = 0.0;      // ς
  double variance = 1.0;  // σ² (stationary variance)
  double ar1 = 0.0;       // φ
};

/// Joint rejection sampling from the truncated trivariate normal; each unit
/// draws from its own substream of `stream_key` so rejections never shift
/// other units' draws. Throws ConfigError when cov is not positive definite.
std::vector<UnitParams> sample_unit_params(const DgpConfig& config, std::size_t n_units,
                                           std::uint64_t stream_key);

/// Stationary AR(1) panels: y_0 ~ N(ς, σ²), then
/// y_t = (1-φ)ς + φ y_{t-1} + sqrt((1-φ²)σ²) u_t with u_t standard normal.
/// One extra normal per unit is drawn ahead of the recursion and discarded,
/// keeping the stream layout stable. Only t = 1..T is returned.
Panel simulate_panel(std::span<const UnitParams> params, std::size_t n_periods,
                     std::uint64_t stream_key);

/// Population truth per statistic from accepted parameter draws only
/// (no panels). Under the AR(1) design mu = ς, gamma_k = σ² φ^k, rho_k = φ^k.
std::vector<double> true_parameter_oracle(const DgpConfig& config,
                                          const std::vector<StatisticSpec>& specs,
                                          std::size_t draws);

struct StudyRow {
  std::string statistic;
  EstimatorKind estimator = EstimatorKind::ed;
  std::size_t n_units = 0;
  std::size_t n_periods = 0;
  double true_value = 0.0;
  double bias = 0.0;
  double rmse = 0.0;
  std::optional<double> cp;  // present when the bootstrap ran for this spec
  std::size_t failed_replications = 0;
};

struct StudyTable {
  std::vector<StudyRow> rows;
};

struct StudyOptions {
  std::vector<StatisticSpec> specs;
  std::vector<EstimatorKind> estimators{EstimatorKind::ed, EstimatorKind::hpj,
                                        EstimatorKind::toj};
  BootstrapConfig bootstrap;       // seed field is ignored (derived per replication)
  std::vector<StatisticSpec> ci_specs;  // bootstrap subset; empty means all specs
  std::size_t oracle_draws = 1'000'000;
  std::vector<double> true_values;  // skip the oracle when prefilled (same order as specs)
};

/// One simulation cell: R replications of simulate -> estimate -> bootstrap,
/// aggregated into bias, rmse and coverage per (statistic, estimator).
/// Fully deterministic in config.seed regardless of thread count.
StudyTable run_study(const DgpConfig& config, const StudyOptions& options);

}  // namespace hetpanel
