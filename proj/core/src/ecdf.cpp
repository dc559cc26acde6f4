#include "hetpanel/ecdf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hetpanel/errors.hpp"

namespace hetpanel {

Ecdf::Ecdf(std::vector<double> values) : sorted_(std::move(values)) {
  if (sorted_.empty()) raise(Errc::invalid_input, "ecdf: empty sample");
  for (double v : sorted_)
    if (!std::isfinite(v)) raise(Errc::invalid_input, "ecdf: non-finite sample value");
  std::sort(sorted_.begin(), sorted_.end());
}

Ecdf::Ecdf(std::span<const double> values)
    : Ecdf(std::vector<double>(values.begin(), values.end())) {}

double Ecdf::eval(double a) const noexcept {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), a);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

std::size_t quantile_rank(std::size_t n, double tau) {
  if (!(tau > 0.0) || tau > 1.0)
    raise(Errc::invalid_input, "quantile: tau must lie in (0, 1]");
  // Smallest m with m/n >= tau. The relative fuzz absorbs the rounding of
  // n * tau when the exact product is an integer.
  const double x = static_cast<double>(n) * tau;
  double m = std::ceil(x - 4.0 * std::numeric_limits<double>::epsilon() * x);
  if (m < 1.0) m = 1.0;
  if (m > static_cast<double>(n)) m = static_cast<double>(n);
  return static_cast<std::size_t>(m);
}

double Ecdf::quantile(double tau) const {
  return sorted_[quantile_rank(sorted_.size(), tau) - 1];
}

double quantile_inplace(std::vector<double>& values, double tau) {
  if (values.empty()) raise(Errc::invalid_input, "quantile: empty sample");
  const std::size_t rank = quantile_rank(values.size(), tau);
  auto nth = values.begin() + static_cast<std::ptrdiff_t>(rank - 1);
  std::nth_element(values.begin(), nth, values.end());
  return *nth;
}

}  // namespace hetpanel
