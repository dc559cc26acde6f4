#include "hetpanel/jackknife.hpp"

#include <string>

#include "hetpanel/errors.hpp"

namespace hetpanel {

namespace {

double group_mean(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

void check_subpanel_lengths(const SplitScheme& scheme, std::size_t max_lag) {
  for (const Segment& seg : scheme.segments) {
    if (seg.length() < max_lag + 2)
      raise(Errc::panel_too_short,
            "subpanel of length " + std::to_string(seg.length()) +
                " cannot support max_lag " + std::to_string(max_lag) +
                " (need at least max_lag + 2 observations)");
  }
}

}  // namespace

std::size_t JackknifeBundle::degenerate_count() const noexcept {
  std::size_t n = 0;
  for (auto f : degenerate) n += f;
  return n;
}

void validate_bundle_shape(std::size_t n_periods, std::size_t max_lag, JackknifeOrder order) {
  check_subpanel_lengths(make_split_scheme(n_periods, SplitKind::half), max_lag);
  if (order == JackknifeOrder::thirds_and_half)
    check_subpanel_lengths(make_split_scheme(n_periods, SplitKind::thirds), max_lag);
}

JackknifeBundle build_bundle(const Panel& panel, std::size_t max_lag, JackknifeOrder order) {
  JackknifeBundle bundle;
  bundle.n_units = panel.n_units();
  bundle.n_periods = panel.n_periods();
  bundle.max_lag = max_lag;
  bundle.order = order;

  const SplitScheme half_scheme = make_split_scheme(panel.n_periods(), SplitKind::half);
  check_subpanel_lengths(half_scheme, max_lag);
  SplitScheme thirds_scheme;
  if (order == JackknifeOrder::thirds_and_half) {
    thirds_scheme = make_split_scheme(panel.n_periods(), SplitKind::thirds);
    check_subpanel_lengths(thirds_scheme, max_lag);
  }

  const Segment full_range{0, panel.n_periods()};
  bundle.full = {full_range, compute_unit_stats(panel, full_range, max_lag)};
  for (const Segment& seg : half_scheme.segments)
    bundle.halves.push_back({seg, compute_unit_stats(panel, seg, max_lag)});
  for (const Segment& seg : thirds_scheme.segments)
    bundle.thirds.push_back({seg, compute_unit_stats(panel, seg, max_lag)});

  bundle.degenerate.assign(bundle.n_units, 0);
  auto mark = [&bundle](const EstimateGroup& g) {
    for (std::size_t i = 0; i < g.units.size(); ++i)
      if (g.units[i].degenerate) bundle.degenerate[i] = 1;
  };
  mark(bundle.full);
  for (const auto& g : bundle.halves) mark(g);
  for (const auto& g : bundle.thirds) mark(g);
  return bundle;
}

double hpj_combine(double ed, std::span<const double> half_estimates) {
  if (half_estimates.size() != 2 && half_estimates.size() != 4)
    raise(Errc::invalid_input, "hpj expects 2 (even T) or 4 (odd T) half-panel estimates, got " +
                                   std::to_string(half_estimates.size()));
  return 2.0 * ed - group_mean(half_estimates);
}

double toj_combine(double ed, std::span<const double> half_estimates,
                   std::span<const double> third_estimates) {
  if (half_estimates.size() != 2 && half_estimates.size() != 4)
    raise(Errc::invalid_input, "toj expects 2 or 4 half-panel estimates, got " +
                                   std::to_string(half_estimates.size()));
  if (third_estimates.size() != 3 && third_estimates.size() != 9)
    raise(Errc::invalid_input, "toj expects 3 or 9 third-panel estimates, got " +
                                   std::to_string(third_estimates.size()));
  return 3.0 * ed - 3.0 * group_mean(half_estimates) + group_mean(third_estimates);
}

CorrectedEstimate evaluate_corrected(const JackknifeBundle& bundle, const StatisticSpec& spec) {
  const bool drop = spec.rho_based();
  detail::Scratch scratch;
  const auto& idx = detail::identity_indices(bundle.n_units);

  auto eval_group = [&](const EstimateGroup& group) {
    const std::vector<double> a = detail::extract_column(group.units, spec.quantity);
    std::vector<double> b;
    if (spec.quantity_b) b = detail::extract_column(group.units, *spec.quantity_b);
    return detail::eval_statistic(spec.target, a, b, idx, bundle.degenerate, drop, scratch);
  };

  CorrectedEstimate out;
  const auto full = eval_group(bundle.full);
  out.ed = full.value;
  out.n_units_used = full.used;
  out.degenerate_units_dropped = full.dropped;

  std::vector<double> halves;
  halves.reserve(bundle.halves.size());
  for (const auto& g : bundle.halves) halves.push_back(eval_group(g).value);
  out.sbar_half = group_mean(halves);
  out.hpj = hpj_combine(out.ed, halves);

  if (!bundle.thirds.empty()) {
    std::vector<double> thirds;
    thirds.reserve(bundle.thirds.size());
    for (const auto& g : bundle.thirds) thirds.push_back(eval_group(g).value);
    out.sbar_third = group_mean(thirds);
    out.toj = toj_combine(out.ed, halves, thirds);
  }
  return out;
}

CorrectedEstimate corrected_estimate(const Panel& panel, const StatisticSpec& spec,
                                     JackknifeOrder order, std::size_t max_lag) {
  return evaluate_corrected(build_bundle(panel, max_lag, order), spec);
}

}  // namespace hetpanel
