#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hetpanel {

/// CDF of the Kolmogorov distribution (the law of the sup-norm of a Brownian
/// bridge): 1 - 2 * sum_{j>=1} (-1)^(j-1) exp(-2 j^2 a^2), clamped to [0, 1].
/// Non-positive arguments map to 0.
double kolmogorov_cdf(double a);

/// Two-sample KS comparison of per-unit estimate samples from two groups.
struct KsResult {
  double statistic = 0.0;  // sqrt(n1*n2/(n1+n2)) * raw_sup
  double raw_sup = 0.0;    // sup |F1 - F2| over the union of sample points
  double p_value = 1.0;    // 1 - kolmogorov_cdf(statistic)
  std::size_t n1 = 0;
  std::size_t n2 = 0;
};

/// Exact sup distance between the two empirical CDFs, evaluated at every
/// jump point (both one-sided limits), scaled and mapped to a p-value
/// through the Kolmogorov distribution.
KsResult ks_two_sample(std::span<const double> group_a, std::span<const double> group_b);

}  // namespace hetpanel
