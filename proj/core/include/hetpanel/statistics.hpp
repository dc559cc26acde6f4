#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hetpanel/errors.hpp"
#include "hetpanel/unit_stats.hpp"

namespace hetpanel {

/// Which per-unit quantity a statistic looks at.
struct QuantityRef {
  enum class Kind { mu, gamma, rho };
  Kind kind = Kind::mu;
  std::size_t lag = 0;  // gamma: k >= 0; rho: k >= 1; ignored for mu

  bool rho_based() const noexcept { return kind == Kind::rho; }
  std::string name() const;
};

enum class Target { mean, stddev, q25, q50, q75, corr };

/// Declarative description of one statistic over the cross-section of
/// per-unit estimates, e.g. mean:rho1 or corr:mu,gamma0.
struct StatisticSpec {
  Target target = Target::mean;
  QuantityRef quantity;                   // primary quantity
  std::optional<QuantityRef> quantity_b;  // second quantity, corr only

  bool is_quantile() const noexcept {
    return target == Target::q25 || target == Target::q50 || target == Target::q75;
  }
  /// Quantile functionals fall outside the smooth class the moment theory
  /// covers; the jackknife is still applied to them, flagged as non-smooth.
  bool nonsmooth() const noexcept { return is_quantile(); }
  bool rho_based() const noexcept {
    return quantity.rho_based() || (quantity_b && quantity_b->rho_based());
  }
  std::size_t max_lag() const noexcept;
  std::string name() const;

  /// Parses selectors like "mean:mu", "std:gamma0", "q50:rho1",
  /// "corr:mu,gamma0". Throws ConfigError on unknown syntax.
  static StatisticSpec parse(const std::string& selector);
};

/// The standard menu over mu, gamma0 and rho1: mean, std and the three
/// quartiles of each quantity plus the three pairwise correlations.
std::vector<StatisticSpec> default_statistic_menu();

enum class EstimatorKind { ed, hpj, toj };
const char* estimator_name(EstimatorKind kind) noexcept;
EstimatorKind parse_estimator(const std::string& name);

/// One evaluated statistic. Degenerate units are dropped from rho-based
/// statistics only; the counts always add back up to N.
struct EstimateResult {
  double point = 0.0;
  EstimatorKind estimator_kind = EstimatorKind::ed;
  std::size_t n_units_used = 0;
  std::size_t degenerate_units_dropped = 0;
};

/// Plug-in estimate of the statistic over per-unit estimates: identity
/// moments for the mean, population-form second moments for std and corr,
/// inf-form empirical quantiles for q25/q50/q75.
EstimateResult plug_in(const std::vector<UnitStats>& stats, const StatisticSpec& spec);

struct SpecOutcome {
  StatisticSpec spec;
  std::optional<EstimateResult> result;
  std::optional<Errc> error;
  std::string message;
};

/// Evaluates every spec over the same stats vector; per-spec failures are
/// recorded without aborting the remaining specs.
std::vector<SpecOutcome> evaluate_all(const std::vector<UnitStats>& stats,
                                      const std::vector<StatisticSpec>& specs);

namespace detail {

/// Per-unit values of one quantity, one slot per unit.
std::vector<double> extract_column(const std::vector<UnitStats>& stats, const QuantityRef& q);

struct KernelResult {
  double value = 0.0;
  std::size_t used = 0;
  std::size_t dropped = 0;
};

struct Scratch {
  std::vector<double> buf;
};

/// Statistic kernel over gathered unit indices. `a` (and `b` for corr) hold
/// per-unit values; `degenerate` may be empty when nothing is dropped.
/// Throws InsufficientUnits / DegenerateVariance like plug_in does.
KernelResult eval_statistic(Target target, std::span<const double> a, std::span<const double> b,
                            std::span<const std::uint32_t> indices,
                            std::span<const std::uint8_t> degenerate, bool drop_degenerate,
                            Scratch& scratch);

const std::vector<std::uint32_t>& identity_indices(std::size_t n);

}  // namespace detail

}  // namespace hetpanel
