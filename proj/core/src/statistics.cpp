#include "hetpanel/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <unordered_map>

#include "hetpanel/ecdf.hpp"

namespace hetpanel {

std::string QuantityRef::name() const {
  switch (kind) {
    case Kind::mu: return "mu";
    case Kind::gamma: return "gamma" + std::to_string(lag);
    case Kind::rho: return "rho" + std::to_string(lag);
  }
  return "?";
}

std::size_t StatisticSpec::max_lag() const noexcept {
  std::size_t k = quantity.kind == QuantityRef::Kind::mu ? 0 : quantity.lag;
  if (quantity_b && quantity_b->kind != QuantityRef::Kind::mu)
    k = std::max(k, quantity_b->lag);
  return k;
}

namespace {

const char* target_name(Target t) {
  switch (t) {
    case Target::mean: return "mean";
    case Target::stddev: return "std";
    case Target::q25: return "q25";
    case Target::q50: return "q50";
    case Target::q75: return "q75";
    case Target::corr: return "corr";
  }
  return "?";
}

QuantityRef parse_quantity(const std::string& text) {
  if (text == "mu") return {QuantityRef::Kind::mu, 0};
  auto parse_lag = [&](std::size_t prefix_len, std::size_t min_lag) {
    const std::string digits = text.substr(prefix_len);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      raise(Errc::config_error, "bad quantity selector '" + text + "'");
    const std::size_t lag = std::stoul(digits);
    if (lag < min_lag)
      raise(Errc::config_error, "quantity '" + text + "' requires lag >= " +
                                    std::to_string(min_lag));
    return lag;
  };
  if (text.rfind("gamma", 0) == 0) return {QuantityRef::Kind::gamma, parse_lag(5, 0)};
  if (text.rfind("rho", 0) == 0) return {QuantityRef::Kind::rho, parse_lag(3, 1)};
  raise(Errc::config_error, "unknown quantity '" + text + "' (expected mu, gammaK or rhoK)");
}

double quantile_tau(Target t) {
  switch (t) {
    case Target::q25: return 0.25;
    case Target::q50: return 0.50;
    default: return 0.75;
  }
}

}  // namespace

std::string StatisticSpec::name() const {
  std::string s = std::string(target_name(target)) + ":" + quantity.name();
  if (quantity_b) s += "," + quantity_b->name();
  return s;
}

StatisticSpec StatisticSpec::parse(const std::string& selector) {
  const auto colon = selector.find(':');
  if (colon == std::string::npos)
    raise(Errc::config_error, "bad statistic selector '" + selector + "' (expected target:quantity)");
  const std::string target_text = selector.substr(0, colon);
  const std::string rest = selector.substr(colon + 1);

  StatisticSpec spec;
  if (target_text == "mean") spec.target = Target::mean;
  else if (target_text == "std") spec.target = Target::stddev;
  else if (target_text == "q25") spec.target = Target::q25;
  else if (target_text == "q50") spec.target = Target::q50;
  else if (target_text == "q75") spec.target = Target::q75;
  else if (target_text == "corr") spec.target = Target::corr;
  else raise(Errc::config_error, "unknown statistic target '" + target_text + "'");

  if (spec.target == Target::corr) {
    const auto comma = rest.find(',');
    if (comma == std::string::npos)
      raise(Errc::config_error, "corr selector needs two quantities: '" + selector + "'");
    spec.quantity = parse_quantity(rest.substr(0, comma));
    spec.quantity_b = parse_quantity(rest.substr(comma + 1));
    if (spec.quantity.kind == spec.quantity_b->kind && spec.quantity.lag == spec.quantity_b->lag)
      raise(Errc::config_error, "corr requires two distinct quantities: '" + selector + "'");
  } else {
    if (rest.find(',') != std::string::npos)
      raise(Errc::config_error, "selector '" + selector + "' takes a single quantity");
    spec.quantity = parse_quantity(rest);
  }
  return spec;
}

std::vector<StatisticSpec> default_statistic_menu() {
  std::vector<StatisticSpec> menu;
  const char* quantities[] = {"mu", "gamma0", "rho1"};
  const char* targets[] = {"mean", "std", "q25", "q50", "q75"};
  for (const char* q : quantities)
    for (const char* t : targets)
      menu.push_back(StatisticSpec::parse(std::string(t) + ":" + q));
  menu.push_back(StatisticSpec::parse("corr:mu,gamma0"));
  menu.push_back(StatisticSpec::parse("corr:mu,rho1"));
  menu.push_back(StatisticSpec::parse("corr:gamma0,rho1"));
  return menu;
}

const char* estimator_name(EstimatorKind kind) noexcept {
  switch (kind) {
    case EstimatorKind::ed: return "ed";
    case EstimatorKind::hpj: return "hpj";
    case EstimatorKind::toj: return "toj";
  }
  return "?";
}

EstimatorKind parse_estimator(const std::string& name) {
  if (name == "ed") return EstimatorKind::ed;
  if (name == "hpj") return EstimatorKind::hpj;
  if (name == "toj") return EstimatorKind::toj;
  raise(Errc::config_error, "unknown estimator '" + name + "' (expected ed, hpj or toj)");
}

namespace detail {

std::vector<double> extract_column(const std::vector<UnitStats>& stats, const QuantityRef& q) {
  std::vector<double> col(stats.size());
  for (std::size_t i = 0; i < stats.size(); ++i) {
    const UnitStats& u = stats[i];
    switch (q.kind) {
      case QuantityRef::Kind::mu: col[i] = u.mu_hat; break;
      case QuantityRef::Kind::gamma:
        if (q.lag >= u.gamma_hat.size())
          raise(Errc::invalid_lag, "statistic needs gamma at lag " + std::to_string(q.lag) +
                                       " but stats were computed with max_lag " +
                                       std::to_string(u.max_lag));
        col[i] = u.gamma_hat[q.lag];
        break;
      case QuantityRef::Kind::rho:
        if (q.lag == 0 || q.lag > u.rho_hat.size())
          raise(Errc::invalid_lag, "statistic needs rho at lag " + std::to_string(q.lag) +
                                       " but stats were computed with max_lag " +
                                       std::to_string(u.max_lag));
        col[i] = u.rho_hat[q.lag - 1];
        break;
    }
  }
  return col;
}

const std::vector<std::uint32_t>& identity_indices(std::size_t n) {
  static std::mutex mutex;
  static std::unordered_map<std::size_t, std::vector<std::uint32_t>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& v = cache[n];
  if (v.size() != n) {
    v.resize(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::uint32_t>(i);
  }
  return v;
}

KernelResult eval_statistic(Target target, std::span<const double> a, std::span<const double> b,
                            std::span<const std::uint32_t> indices,
                            std::span<const std::uint8_t> degenerate, bool drop_degenerate,
                            Scratch& scratch) {
  const bool drop = drop_degenerate && !degenerate.empty();
  KernelResult out;

  auto require_units = [&](std::size_t needed, const char* what) {
    if (out.used < needed)
      raise(Errc::insufficient_units, std::string(what) + " needs at least " +
                                          std::to_string(needed) + " usable units, have " +
                                          std::to_string(out.used));
  };

  switch (target) {
    case Target::mean: {
      double sum = 0.0;
      for (std::uint32_t i : indices) {
        if (drop && degenerate[i]) { ++out.dropped; continue; }
        sum += a[i];
        ++out.used;
      }
      require_units(1, "mean");
      out.value = sum / static_cast<double>(out.used);
      return out;
    }
    case Target::stddev: {
      double s = 0.0, ss = 0.0;
      for (std::uint32_t i : indices) {
        if (drop && degenerate[i]) { ++out.dropped; continue; }
        s += a[i];
        ss += a[i] * a[i];
        ++out.used;
      }
      require_units(2, "std");
      const double n = static_cast<double>(out.used);
      const double m1 = s / n;
      const double var = ss / n - m1 * m1;
      out.value = std::sqrt(std::max(var, 0.0));
      return out;
    }
    case Target::corr: {
      double sa = 0.0, sb = 0.0, saa = 0.0, sbb = 0.0, sab = 0.0;
      for (std::uint32_t i : indices) {
        if (drop && degenerate[i]) { ++out.dropped; continue; }
        sa += a[i];
        sb += b[i];
        saa += a[i] * a[i];
        sbb += b[i] * b[i];
        sab += a[i] * b[i];
        ++out.used;
      }
      require_units(2, "corr");
      const double n = static_cast<double>(out.used);
      const double ma = sa / n, mb = sb / n;
      const double va = saa / n - ma * ma;
      const double vb = sbb / n - mb * mb;
      if (va <= 0.0 || vb <= 0.0)
        raise(Errc::degenerate_variance, "corr: zero variance in one of the quantities");
      out.value = (sab / n - ma * mb) / std::sqrt(va * vb);
      return out;
    }
    case Target::q25:
    case Target::q50:
    case Target::q75: {
      scratch.buf.clear();
      scratch.buf.reserve(indices.size());
      for (std::uint32_t i : indices) {
        if (drop && degenerate[i]) { ++out.dropped; continue; }
        scratch.buf.push_back(a[i]);
      }
      out.used = scratch.buf.size();
      require_units(1, "quantile");
      out.value = quantile_inplace(scratch.buf, quantile_tau(target));
      return out;
    }
  }
  raise(Errc::invalid_input, "unknown statistic target");
}

}  // namespace detail

EstimateResult plug_in(const std::vector<UnitStats>& stats, const StatisticSpec& spec) {
  if (stats.empty()) raise(Errc::insufficient_units, "plug_in: no units");
  const std::vector<double> a = detail::extract_column(stats, spec.quantity);
  std::vector<double> b;
  if (spec.quantity_b) b = detail::extract_column(stats, *spec.quantity_b);

  std::vector<std::uint8_t> degenerate(stats.size(), 0);
  for (std::size_t i = 0; i < stats.size(); ++i) degenerate[i] = stats[i].degenerate ? 1 : 0;

  detail::Scratch scratch;
  const auto kr = detail::eval_statistic(spec.target, a, b,
                                         detail::identity_indices(stats.size()), degenerate,
                                         spec.rho_based(), scratch);
  EstimateResult r;
  r.point = kr.value;
  r.estimator_kind = EstimatorKind::ed;
  r.n_units_used = kr.used;
  r.degenerate_units_dropped = kr.dropped;
  return r;
}

std::vector<SpecOutcome> evaluate_all(const std::vector<UnitStats>& stats,
                                      const std::vector<StatisticSpec>& specs) {
  if (specs.empty()) raise(Errc::invalid_input, "evaluate_all: empty spec list");
  std::vector<SpecOutcome> out;
  out.reserve(specs.size());
  for (const StatisticSpec& spec : specs) {
    SpecOutcome o;
    o.spec = spec;
    try {
      o.result = plug_in(stats, spec);
    } catch (const Error& e) {
      o.error = e.code();
      o.message = e.what();
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace hetpanel
