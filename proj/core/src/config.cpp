#include "hetpanel/config.hpp"

#include <charconv>
#include <fstream>

#include "hetpanel/errors.hpp"

namespace hetpanel {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item =
        trim(comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    raise(Errc::config_error, "config key '" + key + "': '" + text + "' is not a number");
  return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    raise(Errc::config_error,
          "config key '" + key + "': '" + text + "' is not a non-negative integer");
  return v;
}

}  // namespace

KeyValueConfig KeyValueConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::config_error, "cannot open config '" + path + "'");
  KeyValueConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      raise(Errc::config_error, path + ":" + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      raise(Errc::config_error, path + ":" + std::to_string(line_no) + ": empty key");
    if (!cfg.entries_.emplace(key, value).second)
      raise(Errc::config_error, path + ":" + std::to_string(line_no) + ": duplicate key '" + key + "'");
  }
  return cfg;
}

bool KeyValueConfig::has(const std::string& key) const { return entries_.contains(key); }

void KeyValueConfig::require(const std::string& key) const {
  if (!has(key)) raise(Errc::config_error, "config is missing required key '" + key + "'");
}

std::string KeyValueConfig::get_string(const std::string& key, const std::string& fallback) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? fallback : it->second;
}

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? fallback : parse_double(key, it->second);
}

std::uint64_t KeyValueConfig::get_u64(const std::string& key, std::uint64_t fallback) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? fallback : parse_u64(key, it->second);
}

std::size_t KeyValueConfig::get_size(const std::string& key, std::size_t fallback) const {
  return static_cast<std::size_t>(get_u64(key, fallback));
}

std::vector<std::string> KeyValueConfig::get_string_list(const std::string& key) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? std::vector<std::string>{} : split_list(it->second);
}

std::vector<double> KeyValueConfig::get_double_list(const std::string& key) const {
  std::vector<double> out;
  for (const auto& item : get_string_list(key)) out.push_back(parse_double(key, item));
  return out;
}

std::vector<std::size_t> KeyValueConfig::get_size_list(const std::string& key) const {
  std::vector<std::size_t> out;
  for (const auto& item : get_string_list(key))
    out.push_back(static_cast<std::size_t>(parse_u64(key, item)));
  return out;
}

}  // namespace hetpanel
