#pragma once

// Minimal JSON-schema checker covering the keywords used in schemas/.

#include <fstream>
#include <string>

#include <json.hpp>

namespace test {

inline bool matches_type(const nlohmann::json& v, const std::string& type) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "integer") return v.is_number_integer();
  if (type == "boolean") return v.is_boolean();
  if (type == "string") return v.is_string();
  return false;
}

// Returns an empty string when `value` conforms, otherwise the first problem.
inline std::string validate(const nlohmann::json& schema, const nlohmann::json& value, const std::string& at = "$") {
  if (schema.contains("type") && !matches_type(value, schema["type"])) return at + ": wrong type";
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"]) found = found || e == value;
    if (!found) return at + ": not in enum";
  }
  if (schema.contains("minimum") && value.is_number() && value.get<double>() < schema["minimum"].get<double>())
    return at + ": below minimum";
  if (value.is_object()) {
    for (const auto& key : schema.value("required", nlohmann::json::array()))
      if (!value.contains(key.get<std::string>())) return at + ": missing " + key.get<std::string>();
    const auto props = schema.value("properties", nlohmann::json::object());
    for (const auto& [key, member] : value.items()) {
      if (props.contains(key)) {
        if (auto err = validate(props[key], member, at + "." + key); !err.empty()) return err;
      } else if (schema.contains("additionalProperties")) {
        const auto& extra = schema["additionalProperties"];
        if (extra.is_boolean() && !extra.get<bool>()) return at + ": unexpected key " + key;
        if (extra.is_object())
          if (auto err = validate(extra, member, at + "." + key); !err.empty()) return err;
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < value.size(); ++i)
      if (auto err = validate(schema["items"], value[i], at + "[" + std::to_string(i) + "]"); !err.empty()) return err;
  }
  return {};
}

inline nlohmann::json load_schema(const std::string& name) {
  std::ifstream in(std::string(IDEALPOW_SOURCE_DIR) + "/schemas/" + name);
  return nlohmann::json::parse(in);
}

}  // namespace test
