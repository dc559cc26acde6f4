#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hetpanel {

/// Balanced N x T panel of real observations, stored row-major per unit.
/// Labels are optional: when empty, positional ids ("u1".., "1"..) apply.
class Panel {
 public:
  Panel(std::vector<double> values, std::size_t n_units, std::size_t n_periods,
        std::vector<std::string> unit_ids = {}, std::vector<std::string> time_ids = {});

  std::size_t n_units() const noexcept { return n_units_; }
  std::size_t n_periods() const noexcept { return n_periods_; }

  std::span<const double> row(std::size_t unit) const noexcept {
    return {values_.data() + unit * n_periods_, n_periods_};
  }
  const std::vector<double>& values() const noexcept { return values_; }

  bool has_labels() const noexcept { return !unit_ids_.empty(); }
  std::string unit_id(std::size_t unit) const;
  std::string time_id(std::size_t period) const;
  const std::vector<std::string>& unit_ids() const noexcept { return unit_ids_; }
  const std::vector<std::string>& time_ids() const noexcept { return time_ids_; }

 private:
  std::vector<double> values_;
  std::size_t n_units_;
  std::size_t n_periods_;
  std::vector<std::string> unit_ids_;
  std::vector<std::string> time_ids_;
};

/// Half-open range [begin, end) of time indices defining one subpanel.
struct Segment {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t length() const noexcept { return end - begin; }
};

enum class SplitKind { half, thirds };

/// Deterministic panel-splitting rule. For half with even T the two blocks
/// partition 1..T. For odd T the four overlapping subpanels use lengths
/// ceil(T/2) and floor(T/2): (1,1),(2,1),(1,2),(2,2). For thirds with
/// T % 3 != 0 the three rotations of ceil/floor block lengths are all kept,
/// giving 9 subpanels whose estimates get averaged downstream.
struct SplitScheme {
  enum class Kind { half_even, half_odd_fourway, thirds };
  Kind kind;
  std::vector<Segment> segments;  // one contiguous range per subpanel group
};

SplitScheme make_split_scheme(std::size_t n_periods, SplitKind kind);

/// Materializes the subpanels named by make_split_scheme as panel copies.
std::vector<Panel> split_panel(const Panel& panel, SplitKind kind);

/// Copy of the observations restricted to one time segment.
Panel subpanel(const Panel& panel, const Segment& segment);

}  // namespace hetpanel
