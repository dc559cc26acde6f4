#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hetpanel {

/// Empirical CDF over a sample: F(a) = #{values <= a} / n.
class Ecdf {
 public:
  /// Sorts a copy of the values; ties are allowed.
  explicit Ecdf(std::vector<double> values);
  explicit Ecdf(std::span<const double> values);

  /// Fraction of sample points <= a. Right-continuous step function.
  double eval(double a) const noexcept;

  /// Left-continuous generalized inverse: the smallest sample value a with
  /// F(a) >= tau. No interpolation. tau must lie in (0, 1].
  double quantile(double tau) const;

  std::size_t size() const noexcept { return sorted_.size(); }
  const std::vector<double>& sorted_values() const noexcept { return sorted_; }

 private:
  std::vector<double> sorted_;
};

/// 1-based rank of the inf-form empirical quantile in a sample of size n.
std::size_t quantile_rank(std::size_t n, double tau);

/// Inf-form quantile of an unsorted scratch buffer (partially reorders it).
double quantile_inplace(std::vector<double>& values, double tau);

}  // namespace hetpanel
