#pragma once

#include <cstdint>
#include <vector>

#include "hetpanel/jackknife.hpp"
#include "hetpanel/rng.hpp"
#include "hetpanel/statistics.hpp"

namespace hetpanel {

struct BootstrapConfig {
  std::size_t draws = 1000;  // B
  std::uint64_t seed = 0;
  double level = 0.95;  // confidence level in (0, 1)
  EstimatorKind target_estimator = EstimatorKind::hpj;
};

/// Percentile bootstrap interval centered on the point estimate:
/// [point - q_high, point - q_low] where q_low/q_high are inf-form empirical
/// quantiles of the centered draws theta*(b) = S*(b) - S.
struct BootstrapResult {
  double point = 0.0;
  double ci_lower = 0.0;
  double ci_upper = 0.0;
  std::vector<double> draws;  // centered draws theta*(b), missing ones excluded
  double q_low = 0.0;
  double q_high = 0.0;
  std::size_t missing_draws = 0;
  bool unreliable = false;  // more than 1% of draws were missing
  EstimatorKind estimator_kind = EstimatorKind::ed;
};

/// Draws N unit indices i.i.d. uniform with replacement and copies each
/// selected unit's complete tuple (full-panel and all subpanel estimates)
/// into a new bundle. Raw series are never re-estimated.
JackknifeBundle resample_units(const JackknifeBundle& bundle, rng::Stream& stream);

/// Index sequence used for draw b. A pure function of (seed, b), so results
/// never depend on the parallel schedule or on which specs are evaluated.
std::vector<std::uint32_t> bootstrap_indices(std::uint64_t seed, std::size_t draw,
                                             std::size_t n_units);

/// Bootstrap for one statistic using config.target_estimator.
BootstrapResult bootstrap_statistic(const JackknifeBundle& bundle, const StatisticSpec& spec,
                                    const BootstrapConfig& config);

/// Shared engine: one pass over the draws covering every (spec, estimator)
/// pair, reusing the per-draw index sequences. result[s][e] pairs specs[s]
/// with estimators[e].
std::vector<std::vector<BootstrapResult>> bootstrap_matrix(
    const JackknifeBundle& bundle, const std::vector<StatisticSpec>& specs,
    const std::vector<EstimatorKind>& estimators, const BootstrapConfig& config);

}  // namespace hetpanel
