#include "hetpanel/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "hetpanel/errors.hpp"
#include "hetpanel/parallel.hpp"
#include "hetpanel/rng.hpp"

namespace hetpanel {

namespace {

// Lower-triangular Cholesky factor of a 3x3 covariance.
struct Chol3 {
  double l00, l10, l11, l20, l21, l22;
};

Chol3 cholesky3(const std::array<double, 9>& cov) {
  if (cov[1] != cov[3] || cov[2] != cov[6] || cov[5] != cov[7])
    raise(Errc::config_error, "covariance matrix must be symmetric");
  Chol3 c{};
  if (cov[0] <= 0.0) raise(Errc::config_error, "covariance matrix is not positive definite");
  c.l00 = std::sqrt(cov[0]);
  c.l10 = cov[3] / c.l00;
  const double d1 = cov[4] - c.l10 * c.l10;
  if (d1 <= 0.0) raise(Errc::config_error, "covariance matrix is not positive definite");
  c.l11 = std::sqrt(d1);
  c.l20 = cov[6] / c.l00;
  c.l21 = (cov[7] - c.l20 * c.l10) / c.l11;
  const double d2 = cov[8] - c.l20 * c.l20 - c.l21 * c.l21;
  if (d2 <= 0.0) raise(Errc::config_error, "covariance matrix is not positive definite");
  c.l22 = std::sqrt(d2);
  return c;
}

UnitParams draw_accepted(rng::Stream& stream, const DgpConfig& config, const Chol3& chol) {
  for (;;) {
    const double z0 = stream.next_gaussian();
    const double z1 = stream.next_gaussian();
    const double z2 = stream.next_gaussian();
    UnitParams p;
    p.mean = config.mean_vec[0] + chol.l00 * z0;
    p.variance = config.mean_vec[1] + chol.l10 * z0 + chol.l11 * z1;
    p.ar1 = config.mean_vec[2] + chol.l20 * z0 + chol.l21 * z1 + chol.l22 * z2;
    if (p.variance > 0.0 && std::abs(p.ar1) < 1.0) return p;
  }
}

double quantity_true_value(const QuantityRef& q, const UnitParams& p) {
  switch (q.kind) {
    case QuantityRef::Kind::mu: return p.mean;
    case QuantityRef::Kind::gamma: return p.variance * std::pow(p.ar1, static_cast<double>(q.lag));
    case QuantityRef::Kind::rho: return std::pow(p.ar1, static_cast<double>(q.lag));
  }
  return 0.0;
}

}  // namespace

std::vector<UnitParams> sample_unit_params(const DgpConfig& config, std::size_t n_units,
                                           std::uint64_t stream_key) {
  const Chol3 chol = cholesky3(config.cov);
  std::vector<UnitParams> params(n_units);
  parallel::for_chunks(n_units, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      rng::Stream stream(rng::derive_key(stream_key, {i}));
      params[i] = draw_accepted(stream, config, chol);
    }
  });
  return params;
}

Panel simulate_panel(std::span<const UnitParams> params, std::size_t n_periods,
                     std::uint64_t stream_key) {
  if (params.empty()) raise(Errc::invalid_input, "simulate_panel: no units");
  if (n_periods < 2) raise(Errc::invalid_input, "simulate_panel: need T >= 2");
  const std::size_t N = params.size();
  std::vector<double> values(N * n_periods);
  parallel::for_chunks(N, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const UnitParams& p = params[i];
      rng::Stream stream(rng::derive_key(stream_key, {i}));
      double y = p.mean + std::sqrt(p.variance) * stream.next_gaussian();
      (void)stream.next_gaussian();  // reserved initial innovation slot, unused
      const double drift = (1.0 - p.ar1) * p.mean;
      const double innovation_sd = std::sqrt((1.0 - p.ar1 * p.ar1) * p.variance);
      double* row = values.data() + i * n_periods;
      for (std::size_t t = 0; t < n_periods; ++t) {
        y = drift + p.ar1 * y + innovation_sd * stream.next_gaussian();
        row[t] = y;
      }
    }
  });
  return Panel(std::move(values), N, n_periods);
}

std::vector<double> true_parameter_oracle(const DgpConfig& config,
                                          const std::vector<StatisticSpec>& specs,
                                          std::size_t draws) {
  if (draws == 0) raise(Errc::invalid_input, "true_parameter_oracle: draws must be positive");
  const Chol3 chol = cholesky3(config.cov);

  std::vector<UnitParams> sample(draws);
  parallel::for_chunks(draws, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t d = lo; d < hi; ++d) {
      rng::Stream stream(rng::derive_key(config.seed, {rng::kStreamOracle, d}));
      sample[d] = draw_accepted(stream, config, chol);
    }
  });

  // Column per distinct quantity, built once and shared across specs.
  auto column_for = [&](const QuantityRef& q) {
    std::vector<double> col(draws);
    parallel::for_chunks(draws, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t d = lo; d < hi; ++d) col[d] = quantity_true_value(q, sample[d]);
    });
    return col;
  };

  std::deque<std::pair<std::string, std::vector<double>>> columns;
  auto get_column = [&](const QuantityRef& q) -> const std::vector<double>& {
    const std::string key = q.name();
    for (const auto& [name, col] : columns)
      if (name == key) return col;
    columns.emplace_back(key, column_for(q));
    return columns.back().second;
  };

  detail::Scratch scratch;
  const auto& idx = detail::identity_indices(draws);
  std::vector<double> out;
  out.reserve(specs.size());
  for (const StatisticSpec& spec : specs) {
    const auto& a = get_column(spec.quantity);
    std::span<const double> b;
    if (spec.quantity_b) b = get_column(*spec.quantity_b);
    out.push_back(detail::eval_statistic(spec.target, a, b, idx, {}, false, scratch).value);
  }
  return out;
}

StudyTable run_study(const DgpConfig& config, const StudyOptions& options) {
  if (options.specs.empty()) raise(Errc::invalid_input, "run_study: no statistics requested");
  if (options.estimators.empty()) raise(Errc::invalid_input, "run_study: no estimators requested");
  if (config.replications < 1) raise(Errc::config_error, "run_study: replications must be >= 1");

  const std::size_t S = options.specs.size();
  const std::size_t E = options.estimators.size();
  const std::size_t R = config.replications;

  std::size_t max_lag = 1;
  for (const auto& spec : options.specs) max_lag = std::max(max_lag, spec.max_lag());

  const bool want_toj = std::find(options.estimators.begin(), options.estimators.end(),
                                  EstimatorKind::toj) != options.estimators.end();
  const JackknifeOrder order =
      want_toj ? JackknifeOrder::thirds_and_half : JackknifeOrder::half;
  // The same failure would otherwise repeat in every replication.
  validate_bundle_shape(config.n_periods, max_lag, order);

  // Bootstrap subset: indices into options.specs that get a CI (and thus cp).
  std::vector<std::size_t> ci_index;
  if (options.ci_specs.empty()) {
    for (std::size_t s = 0; s < S; ++s) ci_index.push_back(s);
  } else {
    for (const auto& cspec : options.ci_specs) {
      bool found = false;
      for (std::size_t s = 0; s < S; ++s)
        if (options.specs[s].name() == cspec.name()) {
          ci_index.push_back(s);
          found = true;
          break;
        }
      if (!found)
        raise(Errc::config_error, "ci statistic '" + cspec.name() + "' is not in the statistic list");
    }
  }
  std::vector<StatisticSpec> ci_specs;
  for (std::size_t s : ci_index) ci_specs.push_back(options.specs[s]);

  std::vector<double> truth = options.true_values;
  if (truth.empty()) {
    truth = true_parameter_oracle(config, options.specs, options.oracle_draws);
  } else if (truth.size() != S) {
    raise(Errc::config_error, "run_study: true_values must match the statistic list");
  }

  constexpr double kBad = std::numeric_limits<double>::quiet_NaN();
  // estimates[r][s*E + e]; covers[r][ci*E + e] in {0, 1}, NaN when failed.
  std::vector<std::vector<double>> estimates(R, std::vector<double>(S * E, kBad));
  std::vector<std::vector<double>> covers(R, std::vector<double>(ci_index.size() * E, kBad));

  parallel::for_chunks(R, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t r = lo; r < hi; ++r) {
      const auto params = sample_unit_params(
          config, config.n_units, rng::derive_key(config.seed, {rng::kStreamUnitParams, r}));
      const Panel panel = simulate_panel(params, config.n_periods,
                                         rng::derive_key(config.seed, {rng::kStreamPanel, r}));
      const JackknifeBundle bundle = build_bundle(panel, max_lag, order);

      for (std::size_t s = 0; s < S; ++s) {
        try {
          const CorrectedEstimate est = evaluate_corrected(bundle, options.specs[s]);
          for (std::size_t e = 0; e < E; ++e) {
            switch (options.estimators[e]) {
              case EstimatorKind::ed: estimates[r][s * E + e] = est.ed; break;
              case EstimatorKind::hpj: estimates[r][s * E + e] = est.hpj; break;
              case EstimatorKind::toj:
                if (est.toj) estimates[r][s * E + e] = *est.toj;
                break;
            }
          }
        } catch (const Error&) {
          // leave NaN: counted as a failed replication for this statistic
        }
      }

      if (!ci_specs.empty()) {
        BootstrapConfig boot = options.bootstrap;
        boot.seed = rng::derive_key(config.seed, {rng::kStreamBootstrap, r});
        try {
          const auto matrix = bootstrap_matrix(bundle, ci_specs, options.estimators, boot);
          for (std::size_t c = 0; c < ci_index.size(); ++c) {
            const double tv = truth[ci_index[c]];
            for (std::size_t e = 0; e < E; ++e) {
              const BootstrapResult& br = matrix[c][e];
              covers[r][c * E + e] =
                  (tv >= br.ci_lower && tv <= br.ci_upper) ? 1.0 : 0.0;
            }
          }
        } catch (const Error&) {
          // bootstrap failed outright for this replication; covers stay NaN
        }
      }
    }
  });

  StudyTable table;
  for (std::size_t s = 0; s < S; ++s) {
    for (std::size_t e = 0; e < E; ++e) {
      StudyRow row;
      row.statistic = options.specs[s].name();
      row.estimator = options.estimators[e];
      row.n_units = config.n_units;
      row.n_periods = config.n_periods;
      row.true_value = truth[s];

      double sum_err = 0.0, sum_sq = 0.0;
      std::size_t ok = 0;
      for (std::size_t r = 0; r < R; ++r) {
        const double est = estimates[r][s * E + e];
        if (std::isnan(est)) continue;
        const double err = est - truth[s];
        sum_err += err;
        sum_sq += err * err;
        ++ok;
      }
      row.failed_replications = R - ok;
      if (ok > 0) {
        row.bias = sum_err / static_cast<double>(ok);
        row.rmse = std::sqrt(sum_sq / static_cast<double>(ok));
      } else {
        row.bias = kBad;
        row.rmse = kBad;
      }

      for (std::size_t c = 0; c < ci_index.size(); ++c) {
        if (ci_index[c] != s) continue;
        double covered = 0.0;
        std::size_t valid = 0;
        for (std::size_t r = 0; r < R; ++r) {
          const double v = covers[r][c * E + e];
          if (std::isnan(v)) continue;
          covered += v;
          ++valid;
        }
        if (valid > 0) row.cp = covered / static_cast<double>(valid);
      }
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

}  // namespace hetpanel
