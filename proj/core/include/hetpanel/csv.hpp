#pragma once

#include <string>

#include "hetpanel/montecarlo.hpp"
#include "hetpanel/panel.hpp"

namespace hetpanel {

/// Header names for the long-format panel columns.
struct ColumnMapping {
  std::string unit = "unit";
  std::string time = "time";
  std::string value = "value";
};

/// Reads a long-format (unit, time, value) CSV into a balanced panel.
/// Time labels sort numerically when every label parses as a number,
/// lexicographically otherwise. Units keep first-appearance order.
/// Errors: ParseError (with the offending line number), DuplicateKey,
/// UnbalancedPanel (naming the offending units).
Panel read_long_csv(const std::string& path, const ColumnMapping& columns = {});

/// Writes a panel back to long format; floating-point values round-trip
/// exactly (17 significant digits).
void write_long_csv(const Panel& panel, const std::string& path,
                    const ColumnMapping& columns = {});

/// One row per (statistic, estimator, N, T); the cp cell is empty for rows
/// without bootstrap coverage.
void write_study_csv(const StudyTable& table, const std::string& path);

}  // namespace hetpanel
