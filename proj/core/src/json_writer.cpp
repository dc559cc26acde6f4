#include "hetpanel/json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "hetpanel/errors.hpp"

namespace hetpanel {

namespace {

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void dump(std::string& out, const ordered_json& v, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  switch (v.type()) {
    case ordered_json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        append_escaped(out, key);
        out += ": ";
        dump(out, item, indent, depth + 1);
      }
      out += '\n';
      out += pad;
      out += '}';
      return;
    }
    case ordered_json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ",\n";
        out += pad_in;
        dump(out, v[i], indent, depth + 1);
      }
      out += '\n';
      out += pad;
      out += ']';
      return;
    }
    case ordered_json::value_t::string:
      append_escaped(out, v.get_ref<const std::string&>());
      return;
    case ordered_json::value_t::boolean:
      out += v.get<bool>() ? "true" : "false";
      return;
    case ordered_json::value_t::number_integer: {
      out += std::to_string(v.get<std::int64_t>());
      return;
    }
    case ordered_json::value_t::number_unsigned: {
      out += std::to_string(v.get<std::uint64_t>());
      return;
    }
    case ordered_json::value_t::number_float: {
      const double d = v.get<double>();
      if (!std::isfinite(d))
        raise(Errc::invalid_input, "refusing to serialize a non-finite number to JSON");
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", d);
      out += buf;
      return;
    }
    case ordered_json::value_t::null:
    default:
      out += "null";
      return;
  }
}

}  // namespace

std::string dump_json(const ordered_json& value, int indent) {
  std::string out;
  dump(out, value, indent, 0);
  out += '\n';
  return out;
}

void write_json_file(const ordered_json& value, const std::string& path, int indent) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::invalid_input, "cannot write '" + path + "'");
  out << dump_json(value, indent);
  if (!out) raise(Errc::invalid_input, "write to '" + path + "' failed");
}

}  // namespace hetpanel
