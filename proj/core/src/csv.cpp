#include "hetpanel/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "hetpanel/errors.hpp"

namespace hetpanel {

namespace {

// RFC-4180-style field splitting: quoted fields may contain commas and
// doubled quotes.
std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      if (!field.empty())
        raise(Errc::parse_error, "row " + std::to_string(line_no) + ": stray quote");
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted) raise(Errc::parse_error, "row " + std::to_string(line_no) + ": unterminated quote");
  fields.push_back(std::move(field));
  return fields;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

bool parse_number(const std::string& text, double& out) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Panel read_long_csv(const std::string& path, const ColumnMapping& columns) {
  std::ifstream in(path);
  if (!in) raise(Errc::invalid_input, "cannot open '" + path + "'");

  std::string line;
  if (!std::getline(in, line))
    raise(Errc::parse_error, "'" + path + "' is empty (header row required)");
  const auto header = split_csv_line(strip_cr(line), 1);

  auto find_col = [&](const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
      raise(Errc::parse_error, "'" + path + "' has no column named '" + name + "'");
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t unit_col = find_col(columns.unit);
  const std::size_t time_col = find_col(columns.time);
  const std::size_t value_col = find_col(columns.value);

  std::vector<std::string> unit_order;
  std::unordered_map<std::string, std::size_t> unit_index;
  std::unordered_map<std::string, std::map<std::string, double>> cells;
  std::vector<std::string> time_labels;
  std::unordered_map<std::string, bool> time_seen;

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto fields = split_csv_line(line, line_no);
    if (fields.size() != header.size())
      raise(Errc::parse_error, "row " + std::to_string(line_no) + ": expected " +
                                   std::to_string(header.size()) + " fields, found " +
                                   std::to_string(fields.size()));
    const std::string& unit = fields[unit_col];
    const std::string& time = fields[time_col];
    double value = 0.0;
    if (!parse_number(fields[value_col], value) || !std::isfinite(value))
      raise(Errc::parse_error, "row " + std::to_string(line_no) + ": value '" +
                                   fields[value_col] + "' is not a finite number");
    if (!unit_index.contains(unit)) {
      unit_index.emplace(unit, unit_order.size());
      unit_order.push_back(unit);
    }
    auto& unit_cells = cells[unit];
    if (!unit_cells.emplace(time, value).second)
      raise(Errc::duplicate_key, "row " + std::to_string(line_no) + ": duplicate (unit, time) = ('" +
                                     unit + "', '" + time + "')");
    if (!time_seen[time]) {
      time_seen[time] = true;
      time_labels.push_back(time);
    }
  }
  if (unit_order.empty()) raise(Errc::invalid_input, "'" + path + "' contains no data rows");

  // Declared time ordering: numeric when every label is a number.
  bool all_numeric = true;
  std::vector<double> numeric(time_labels.size());
  for (std::size_t i = 0; i < time_labels.size(); ++i)
    if (!parse_number(time_labels[i], numeric[i])) {
      all_numeric = false;
      break;
    }
  if (all_numeric) {
    std::vector<std::size_t> perm(time_labels.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return numeric[a] < numeric[b]; });
    std::vector<std::string> sorted;
    sorted.reserve(perm.size());
    for (std::size_t i : perm) sorted.push_back(time_labels[i]);
    time_labels = std::move(sorted);
  } else {
    std::sort(time_labels.begin(), time_labels.end());
  }

  const std::size_t T = time_labels.size();
  std::string offenders;
  std::size_t offender_count = 0;
  for (const auto& unit : unit_order) {
    if (cells[unit].size() != T) {
      if (offender_count < 8) offenders += (offenders.empty() ? "" : ", ") + unit;
      ++offender_count;
    }
  }
  if (offender_count > 0)
    raise(Errc::unbalanced_panel,
          "panel is unbalanced: " + std::to_string(offender_count) +
              " unit(s) are missing observations (" + offenders +
              (offender_count > 8 ? ", ..." : "") + ")");

  std::vector<double> values(unit_order.size() * T);
  for (std::size_t i = 0; i < unit_order.size(); ++i) {
    const auto& unit_cells = cells[unit_order[i]];
    for (std::size_t t = 0; t < T; ++t) {
      const auto it = unit_cells.find(time_labels[t]);
      if (it == unit_cells.end())
        raise(Errc::unbalanced_panel,
              "unit '" + unit_order[i] + "' is missing time '" + time_labels[t] + "'");
      values[i * T + t] = it->second;
    }
  }
  const std::size_t N = unit_order.size();
  return Panel(std::move(values), N, T, std::move(unit_order), std::move(time_labels));
}

void write_long_csv(const Panel& panel, const std::string& path, const ColumnMapping& columns) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::invalid_input, "cannot write '" + path + "'");
  out << columns.unit << ',' << columns.time << ',' << columns.value << '\n';
  for (std::size_t i = 0; i < panel.n_units(); ++i) {
    const std::string unit = csv_escape(panel.unit_id(i));
    const auto row = panel.row(i);
    for (std::size_t t = 0; t < panel.n_periods(); ++t)
      out << unit << ',' << csv_escape(panel.time_id(t)) << ',' << format_double(row[t]) << '\n';
  }
  if (!out) raise(Errc::invalid_input, "write to '" + path + "' failed");
}

void write_study_csv(const StudyTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::invalid_input, "cannot write '" + path + "'");
  out << "statistic,estimator,n,t,true,bias,rmse,cp,failed_replications\n";
  for (const StudyRow& row : table.rows) {
    out << csv_escape(row.statistic) << ',' << estimator_name(row.estimator) << ','
        << row.n_units << ',' << row.n_periods << ',' << format_double(row.true_value) << ','
        << format_double(row.bias) << ',' << format_double(row.rmse) << ','
        << (row.cp ? format_double(*row.cp) : "") << ',' << row.failed_replications << '\n';
  }
  if (!out) raise(Errc::invalid_input, "write to '" + path + "' failed");
}

}  // namespace hetpanel
