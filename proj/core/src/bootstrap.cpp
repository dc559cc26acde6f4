#include "hetpanel/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hetpanel/ecdf.hpp"
#include "hetpanel/errors.hpp"
#include "hetpanel/parallel.hpp"

namespace hetpanel {

namespace {

constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

void validate_config(const BootstrapConfig& config) {
  if (config.draws < 1) raise(Errc::config_error, "bootstrap needs at least one draw");
  if (!(config.level > 0.0) || !(config.level < 1.0))
    raise(Errc::config_error, "bootstrap level must lie strictly between 0 and 1");
}

// Columnar view of one bundle group for the quantities a spec touches.
struct SpecColumns {
  std::vector<double> a;
  std::vector<double> b;
};

struct SpecGroups {
  SpecColumns full;
  std::vector<SpecColumns> halves;
  std::vector<SpecColumns> thirds;
};

SpecColumns make_columns(const EstimateGroup& group, const StatisticSpec& spec) {
  SpecColumns c;
  c.a = detail::extract_column(group.units, spec.quantity);
  if (spec.quantity_b) c.b = detail::extract_column(group.units, *spec.quantity_b);
  return c;
}

SpecGroups make_groups(const JackknifeBundle& bundle, const StatisticSpec& spec) {
  SpecGroups g;
  g.full = make_columns(bundle.full, spec);
  for (const auto& h : bundle.halves) g.halves.push_back(make_columns(h, spec));
  for (const auto& t : bundle.thirds) g.thirds.push_back(make_columns(t, spec));
  return g;
}

double mean_of(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

bool is_degenerate_draw(const Error& e) {
  return e.code() == Errc::insufficient_units || e.code() == Errc::degenerate_variance;
}

// Evaluates the statistic for each requested estimator kind on the units selected
// by `indices`. A degenerate evaluation marks only the estimators that need
// the failing group as missing (NaN): a draw whose half-subpanel statistic
// degenerates can still contribute an ED value.
void eval_estimators(const SpecGroups& groups, const StatisticSpec& spec,
                     const JackknifeBundle& bundle, std::span<const std::uint32_t> indices,
                     const std::vector<EstimatorKind>& estimators, detail::Scratch& scratch,
                     std::vector<double>& out_values) {
  const bool drop = spec.rho_based();
  bool need_halves = false, need_thirds = false;
  for (EstimatorKind k : estimators) {
    need_halves |= k != EstimatorKind::ed;
    need_thirds |= k == EstimatorKind::toj;
  }

  double ed = kMissing, sbar_half = kMissing, sbar_third = kMissing;
  try {
    ed = detail::eval_statistic(spec.target, groups.full.a, groups.full.b, indices,
                                bundle.degenerate, drop, scratch)
             .value;
  } catch (const Error& e) {
    if (!is_degenerate_draw(e)) throw;
  }
  std::vector<double> parts;
  if (need_halves) {
    try {
      for (const auto& h : groups.halves)
        parts.push_back(detail::eval_statistic(spec.target, h.a, h.b, indices,
                                               bundle.degenerate, drop, scratch)
                            .value);
      sbar_half = mean_of(parts);
    } catch (const Error& e) {
      if (!is_degenerate_draw(e)) throw;
    }
  }
  if (need_thirds) {
    if (groups.thirds.empty()) raise(Errc::invalid_input, "toj requires third subpanels");
    parts.clear();
    try {
      for (const auto& t : groups.thirds)
        parts.push_back(detail::eval_statistic(spec.target, t.a, t.b, indices,
                                               bundle.degenerate, drop, scratch)
                            .value);
      sbar_third = mean_of(parts);
    } catch (const Error& e) {
      if (!is_degenerate_draw(e)) throw;
    }
  }
  for (std::size_t e = 0; e < estimators.size(); ++e) {
    switch (estimators[e]) {
      case EstimatorKind::ed: out_values[e] = ed; break;
      case EstimatorKind::hpj: out_values[e] = 2.0 * ed - sbar_half; break;
      case EstimatorKind::toj: out_values[e] = 3.0 * ed - 3.0 * sbar_half + sbar_third; break;
    }
  }
}

double point_for(const CorrectedEstimate& est, EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::ed: return est.ed;
    case EstimatorKind::hpj: return est.hpj;
    case EstimatorKind::toj:
      if (!est.toj) raise(Errc::invalid_input, "toj point estimate requires third subpanels");
      return *est.toj;
  }
  raise(Errc::invalid_input, "unknown estimator kind");
}

}  // namespace

std::vector<std::uint32_t> bootstrap_indices(std::uint64_t seed, std::size_t draw,
                                             std::size_t n_units) {
  rng::Stream stream(rng::derive_key(seed, {rng::kStreamBootstrap, draw}));
  std::vector<std::uint32_t> idx(n_units);
  for (auto& v : idx) v = static_cast<std::uint32_t>(stream.uniform_below(n_units));
  return idx;
}

JackknifeBundle resample_units(const JackknifeBundle& bundle, rng::Stream& stream) {
  std::vector<std::uint32_t> idx(bundle.n_units);
  for (auto& v : idx) v = static_cast<std::uint32_t>(stream.uniform_below(bundle.n_units));

  JackknifeBundle out;
  out.n_units = bundle.n_units;
  out.n_periods = bundle.n_periods;
  out.max_lag = bundle.max_lag;
  out.order = bundle.order;
  auto gather = [&idx](const EstimateGroup& g) {
    EstimateGroup r;
    r.segment = g.segment;
    r.units.reserve(idx.size());
    for (std::uint32_t i : idx) r.units.push_back(g.units[i]);
    return r;
  };
  out.full = gather(bundle.full);
  for (const auto& h : bundle.halves) out.halves.push_back(gather(h));
  for (const auto& t : bundle.thirds) out.thirds.push_back(gather(t));
  out.degenerate.reserve(idx.size());
  for (std::uint32_t i : idx) out.degenerate.push_back(bundle.degenerate[i]);
  return out;
}

std::vector<std::vector<BootstrapResult>> bootstrap_matrix(
    const JackknifeBundle& bundle, const std::vector<StatisticSpec>& specs,
    const std::vector<EstimatorKind>& estimators, const BootstrapConfig& config) {
  validate_config(config);
  if (specs.empty() || estimators.empty())
    raise(Errc::invalid_input, "bootstrap_matrix: specs and estimators must be nonempty");

  const std::size_t S = specs.size();
  const std::size_t E = estimators.size();
  const std::size_t B = config.draws;

  // Point estimates on the original bundle.
  std::vector<std::vector<double>> points(S, std::vector<double>(E));
  for (std::size_t s = 0; s < S; ++s) {
    const CorrectedEstimate est = evaluate_corrected(bundle, specs[s]);
    for (std::size_t e = 0; e < E; ++e) points[s][e] = point_for(est, estimators[e]);
  }

  std::vector<SpecGroups> groups;
  groups.reserve(S);
  for (const auto& spec : specs) groups.push_back(make_groups(bundle, spec));

  // raw[s][e][b] = estimator value on draw b (NaN when the draw is missing).
  std::vector<std::vector<std::vector<double>>> raw(
      S, std::vector<std::vector<double>>(E, std::vector<double>(B)));

  parallel::for_chunks(B, [&](std::size_t lo, std::size_t hi) {
    detail::Scratch scratch;
    std::vector<double> values(E);
    for (std::size_t b = lo; b < hi; ++b) {
      const auto idx = bootstrap_indices(config.seed, b, bundle.n_units);
      for (std::size_t s = 0; s < S; ++s) {
        eval_estimators(groups[s], specs[s], bundle, idx, estimators, scratch, values);
        for (std::size_t e = 0; e < E; ++e) raw[s][e][b] = values[e];
      }
    }
  });

  const double tau_low = (1.0 - config.level) / 2.0;
  const double tau_high = (1.0 + config.level) / 2.0;

  std::vector<std::vector<BootstrapResult>> out(S, std::vector<BootstrapResult>(E));
  for (std::size_t s = 0; s < S; ++s) {
    for (std::size_t e = 0; e < E; ++e) {
      BootstrapResult& r = out[s][e];
      r.estimator_kind = estimators[e];
      r.point = points[s][e];
      r.draws.reserve(B);
      for (double v : raw[s][e]) {
        if (std::isnan(v)) {
          ++r.missing_draws;
        } else {
          r.draws.push_back(v - r.point);
        }
      }
      if (r.draws.empty())
        raise(Errc::degenerate_variance,
              "bootstrap: every draw was degenerate for " + specs[s].name());
      r.unreliable =
          static_cast<double>(r.missing_draws) > 0.01 * static_cast<double>(B);
      std::vector<double> sorted = r.draws;
      std::sort(sorted.begin(), sorted.end());
      r.q_low = sorted[quantile_rank(sorted.size(), tau_low) - 1];
      r.q_high = sorted[quantile_rank(sorted.size(), tau_high) - 1];
      r.ci_lower = r.point - r.q_high;
      r.ci_upper = r.point - r.q_low;
    }
  }
  return out;
}

BootstrapResult bootstrap_statistic(const JackknifeBundle& bundle, const StatisticSpec& spec,
                                    const BootstrapConfig& config) {
  auto matrix = bootstrap_matrix(bundle, {spec}, {config.target_estimator}, config);
  return std::move(matrix[0][0]);
}

}  // namespace hetpanel
