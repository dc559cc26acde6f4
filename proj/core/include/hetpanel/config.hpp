#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hetpanel {

/// Flat key-value config file: one `key = value` per line, `#` comments.
/// Typed getters throw ConfigError on malformed values; every CLI flag has
/// a config twin and flags override config.
class KeyValueConfig {
 public:
  KeyValueConfig() = default;
  static KeyValueConfig load(const std::string& path);

  bool has(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  std::size_t get_size(const std::string& key, std::size_t fallback) const;

  /// Comma-separated lists.
  std::vector<std::string> get_string_list(const std::string& key) const;
  std::vector<double> get_double_list(const std::string& key) const;
  std::vector<std::size_t> get_size_list(const std::string& key) const;

  void require(const std::string& key) const;
  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace hetpanel
