#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hetpanel/panel.hpp"

namespace hetpanel {

/// Arithmetic mean of one unit's series.
double unit_mean(std::span<const double> series);

/// Sample autocovariance at the given lag with divisor T - lag; both factors
/// are demeaned with the full-sample mean of the series.
double unit_autocov(std::span<const double> series, std::size_t lag);

/// Sample autocorrelation: autocov(lag) / autocov(0). Throws
/// DegenerateVariance when the series is constant.
double unit_autocorr(std::span<const double> series, std::size_t lag);

/// Per-unit sample estimates up to max_lag. rho(k) is stored for k = 1..K.
/// A unit with zero sample variance is flagged degenerate; its rho entries
/// are unusable and consumers must honor the flag.
struct UnitStats {
  double mu_hat = 0.0;
  std::vector<double> gamma_hat;  // index k = 0..K
  std::vector<double> rho_hat;    // index k-1 holds rho_k, k = 1..K
  std::size_t max_lag = 0;
  bool degenerate = false;

  double gamma(std::size_t k) const { return gamma_hat[k]; }
  double rho(std::size_t k) const { return rho_hat[k - 1]; }
};

/// Per-unit estimates over the full panel. Degenerate units are flagged,
/// never dropped here.
std::vector<UnitStats> compute_unit_stats(const Panel& panel, std::size_t max_lag);

/// Same estimators restricted to a time segment (divisors use the segment
/// length), so subpanel estimates share one code path with full-panel ones.
std::vector<UnitStats> compute_unit_stats(const Panel& panel, const Segment& segment,
                                          std::size_t max_lag);

}  // namespace hetpanel
