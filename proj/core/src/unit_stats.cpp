#include "hetpanel/unit_stats.hpp"

#include <limits>
#include <string>

#include "hetpanel/errors.hpp"
#include "hetpanel/parallel.hpp"

namespace hetpanel {

double unit_mean(std::span<const double> series) {
  if (series.empty()) raise(Errc::invalid_input, "unit_mean: empty series");
  double sum = 0.0;
  for (double v : series) sum += v;
  return sum / static_cast<double>(series.size());
}

double unit_autocov(std::span<const double> series, std::size_t lag) {
  const std::size_t T = series.size();
  if (T == 0) raise(Errc::invalid_input, "unit_autocov: empty series");
  if (lag >= T)
    raise(Errc::invalid_lag,
          "unit_autocov: lag " + std::to_string(lag) + " requires T > lag (T = " +
              std::to_string(T) + ")");
  const double mean = unit_mean(series);
  double sum = 0.0;
  for (std::size_t t = lag; t < T; ++t) sum += (series[t] - mean) * (series[t - lag] - mean);
  return sum / static_cast<double>(T - lag);
}

double unit_autocorr(std::span<const double> series, std::size_t lag) {
  const double var = unit_autocov(series, 0);
  if (var == 0.0)
    raise(Errc::degenerate_variance, "unit_autocorr: constant series has zero variance");
  return unit_autocov(series, lag) / var;
}

namespace {

UnitStats stats_for_span(std::span<const double> series, std::size_t max_lag) {
  UnitStats s;
  s.max_lag = max_lag;
  const std::size_t T = series.size();
  const double mean = unit_mean(series);
  s.mu_hat = mean;
  s.gamma_hat.resize(max_lag + 1);
  for (std::size_t k = 0; k <= max_lag; ++k) {
    double sum = 0.0;
    for (std::size_t t = k; t < T; ++t) sum += (series[t] - mean) * (series[t - k] - mean);
    s.gamma_hat[k] = sum / static_cast<double>(T - k);
  }
  s.rho_hat.resize(max_lag);
  if (s.gamma_hat[0] == 0.0) {
    s.degenerate = true;
    for (auto& r : s.rho_hat) r = std::numeric_limits<double>::quiet_NaN();
  } else {
    for (std::size_t k = 1; k <= max_lag; ++k) s.rho_hat[k - 1] = s.gamma_hat[k] / s.gamma_hat[0];
  }
  return s;
}

}  // namespace

std::vector<UnitStats> compute_unit_stats(const Panel& panel, const Segment& segment,
                                          std::size_t max_lag) {
  const std::size_t len = segment.length();
  if (segment.end > panel.n_periods() || segment.begin >= segment.end)
    raise(Errc::invalid_input, "compute_unit_stats: segment out of range");
  if (max_lag >= len)
    raise(Errc::invalid_lag, "compute_unit_stats: max_lag " + std::to_string(max_lag) +
                                 " requires segment length > max_lag (length = " +
                                 std::to_string(len) + ")");
  std::vector<UnitStats> out(panel.n_units());
  parallel::for_chunks(panel.n_units(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      out[i] = stats_for_span(panel.row(i).subspan(segment.begin, len), max_lag);
  });
  return out;
}

std::vector<UnitStats> compute_unit_stats(const Panel& panel, std::size_t max_lag) {
  return compute_unit_stats(panel, Segment{0, panel.n_periods()}, max_lag);
}

}  // namespace hetpanel
