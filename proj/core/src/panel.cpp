#include "hetpanel/panel.hpp"

#include <cmath>
#include <string>

#include "hetpanel/errors.hpp"

namespace hetpanel {

Panel::Panel(std::vector<double> values, std::size_t n_units, std::size_t n_periods,
             std::vector<std::string> unit_ids, std::vector<std::string> time_ids)
    : values_(std::move(values)),
      n_units_(n_units),
      n_periods_(n_periods),
      unit_ids_(std::move(unit_ids)),
      time_ids_(std::move(time_ids)) {
  if (n_units_ < 1) raise(Errc::invalid_input, "panel requires at least one unit");
  if (n_periods_ < 2) raise(Errc::invalid_input, "panel requires at least two time periods");
  if (values_.size() != n_units_ * n_periods_)
    raise(Errc::invalid_input, "panel values do not form a balanced N x T rectangle");
  for (double v : values_)
    if (!std::isfinite(v)) raise(Errc::invalid_input, "panel contains a non-finite value");
  if (!unit_ids_.empty() && unit_ids_.size() != n_units_)
    raise(Errc::invalid_input, "unit label count does not match N");
  if (!time_ids_.empty() && time_ids_.size() != n_periods_)
    raise(Errc::invalid_input, "time label count does not match T");
}

std::string Panel::unit_id(std::size_t unit) const {
  if (unit_ids_.empty()) return "u" + std::to_string(unit + 1);
  return unit_ids_[unit];
}

std::string Panel::time_id(std::size_t period) const {
  if (time_ids_.empty()) return std::to_string(period + 1);
  return time_ids_[period];
}

SplitScheme make_split_scheme(std::size_t n_periods, SplitKind kind) {
  SplitScheme scheme;
  const std::size_t T = n_periods;
  if (kind == SplitKind::half) {
    if (T < 4) raise(Errc::panel_too_short, "half split requires T >= 4");
    if (T % 2 == 0) {
      scheme.kind = SplitScheme::Kind::half_even;
      scheme.segments = {{0, T / 2}, {T / 2, T}};
    } else {
      const std::size_t hi = (T + 1) / 2;  // ceil(T/2)
      const std::size_t lo = T / 2;        // floor(T/2)
      scheme.kind = SplitScheme::Kind::half_odd_fourway;
      scheme.segments = {{0, hi}, {hi, T}, {0, lo}, {lo, T}};
    }
    return scheme;
  }

  if (T < 6) raise(Errc::panel_too_short, "thirds split requires T >= 6");
  scheme.kind = SplitScheme::Kind::thirds;
  const std::size_t q = T / 3;
  const std::size_t r = T % 3;
  auto push_blocks = [&scheme](std::size_t a, std::size_t b, std::size_t c) {
    scheme.segments.push_back({0, a});
    scheme.segments.push_back({a, a + b});
    scheme.segments.push_back({a + b, a + b + c});
  };
  if (r == 0) {
    push_blocks(q, q, q);
  } else if (r == 1) {
    push_blocks(q + 1, q, q);
    push_blocks(q, q + 1, q);
    push_blocks(q, q, q + 1);
  } else {
    push_blocks(q + 1, q + 1, q);
    push_blocks(q + 1, q, q + 1);
    push_blocks(q, q + 1, q + 1);
  }
  return scheme;
}

Panel subpanel(const Panel& panel, const Segment& segment) {
  const std::size_t len = segment.length();
  std::vector<double> values;
  values.reserve(panel.n_units() * len);
  for (std::size_t i = 0; i < panel.n_units(); ++i) {
    const auto row = panel.row(i);
    values.insert(values.end(), row.begin() + segment.begin, row.begin() + segment.end);
  }
  std::vector<std::string> times;
  if (!panel.time_ids().empty())
    times.assign(panel.time_ids().begin() + segment.begin,
                 panel.time_ids().begin() + segment.end);
  return Panel(std::move(values), panel.n_units(), len, panel.unit_ids(), std::move(times));
}

std::vector<Panel> split_panel(const Panel& panel, SplitKind kind) {
  const SplitScheme scheme = make_split_scheme(panel.n_periods(), kind);
  std::vector<Panel> groups;
  groups.reserve(scheme.segments.size());
  for (const Segment& seg : scheme.segments) groups.push_back(subpanel(panel, seg));
  return groups;
}

}  // namespace hetpanel
