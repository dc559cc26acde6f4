#pragma once

#include <stdexcept>
#include <string>

namespace hetpanel {

enum class Errc {
  invalid_input,
  invalid_lag,
  degenerate_variance,
  panel_too_short,
  insufficient_units,
  unbalanced_panel,
  parse_error,
  duplicate_key,
  config_error,
};

/// All library failures are reported through this exception type.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_input: return "InvalidInput";
    case Errc::invalid_lag: return "InvalidLag";
    case Errc::degenerate_variance: return "DegenerateVariance";
    case Errc::panel_too_short: return "PanelTooShort";
    case Errc::insufficient_units: return "InsufficientUnits";
    case Errc::unbalanced_panel: return "UnbalancedPanel";
    case Errc::parse_error: return "ParseError";
    case Errc::duplicate_key: return "DuplicateKey";
    case Errc::config_error: return "ConfigError";
  }
  return "Error";
}

// Process exit codes, one per error family: 2 input, 3 config, 4 degeneracy.
inline int exit_code_for(Errc code) noexcept {
  switch (code) {
    case Errc::config_error:
      return 3;
    case Errc::degenerate_variance:
      return 4;
    default:
      return 2;
  }
}

}  // namespace hetpanel
