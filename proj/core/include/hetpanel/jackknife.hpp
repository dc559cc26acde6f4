#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hetpanel/panel.hpp"
#include "hetpanel/statistics.hpp"
#include "hetpanel/unit_stats.hpp"

namespace hetpanel {

enum class JackknifeOrder { half, thirds_and_half };

/// Per-unit estimates from one estimation window (full panel or a subpanel).
struct EstimateGroup {
  Segment segment;
  std::vector<UnitStats> units;
};

/// Full-panel and subpanel per-unit estimates, row-aligned across groups.
/// This is the resampling unit for the cross-sectional bootstrap: a unit's
/// whole tuple of estimates travels together.
struct JackknifeBundle {
  std::size_t n_units = 0;
  std::size_t n_periods = 0;
  std::size_t max_lag = 0;
  JackknifeOrder order = JackknifeOrder::half;
  EstimateGroup full;
  std::vector<EstimateGroup> halves;  // 2 groups (even T) or 4 (odd T)
  std::vector<EstimateGroup> thirds;  // 3 groups, or 9 when T % 3 != 0; empty for half order
  // A unit flagged degenerate in any group is excluded from rho-based
  // statistics in every group, keeping subpanel estimates comparable.
  std::vector<std::uint8_t> degenerate;

  std::size_t degenerate_count() const noexcept;
};

/// Throws PanelTooShort unless every subpanel the order needs keeps at
/// least max_lag + 2 observations.
void validate_bundle_shape(std::size_t n_periods, std::size_t max_lag, JackknifeOrder order);

/// Computes per-unit stats for the full panel and every subpanel. Every
/// subpanel must keep at least max_lag + 2 observations.
JackknifeBundle build_bundle(const Panel& panel, std::size_t max_lag, JackknifeOrder order);

/// Half-panel jackknife combination: 2 * ed - mean(half_estimates).
/// Expects 2 estimates (even T) or 4 (odd T).
double hpj_combine(double ed, std::span<const double> half_estimates);

/// Third-order jackknife combination:
/// 3 * ed - 3 * mean(half_estimates) + mean(third_estimates).
/// The weights (3, -3, 1) zero out bias terms b1/T + b2/T^2 across subpanel
/// lengths T, T/2 and T/3; they solve a+b+c = 1, a+2b+3c = 0, a+4b+9c = 0.
double toj_combine(double ed, std::span<const double> half_estimates,
                   std::span<const double> third_estimates);

/// Uncorrected and jackknife-corrected values of one statistic.
struct CorrectedEstimate {
  double ed = 0.0;
  double sbar_half = 0.0;
  std::optional<double> sbar_third;
  double hpj = 0.0;
  std::optional<double> toj;
  std::size_t n_units_used = 0;
  std::size_t degenerate_units_dropped = 0;
};

/// Evaluates the statistic on the full panel and every subpanel of the bundle,
/// then applies the HPJ and (when thirds are present) TOJ combinations.
/// Quantile specs run through the identical pipeline.
CorrectedEstimate evaluate_corrected(const JackknifeBundle& bundle, const StatisticSpec& spec);

/// Convenience: build_bundle + evaluate_corrected.
CorrectedEstimate corrected_estimate(const Panel& panel, const StatisticSpec& spec,
                                     JackknifeOrder order, std::size_t max_lag);

}  // namespace hetpanel
