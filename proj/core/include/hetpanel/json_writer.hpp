#pragma once

#include <string>

#include <json.hpp>

namespace hetpanel {

using ordered_json = nlohmann::ordered_json;

/// Serializes JSON with every floating-point value printed at 17 significant
/// digits and keys in insertion order, so identical reports are byte-identical
/// regardless of platform defaults or thread count.
std::string dump_json(const ordered_json& value, int indent = 2);

void write_json_file(const ordered_json& value, const std::string& path, int indent = 2);

}  // namespace hetpanel
