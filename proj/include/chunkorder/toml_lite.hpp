#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace chunkorder {

/// Small TOML subset reader: top-level key/value pairs, [tables],
/// [[arrays of tables]], string/integer/float/boolean values and #
/// comments. Covers the pipeline-config schema; anything else is a
/// ConfigError.
namespace toml_lite {

using Value = std::variant<std::string, std::int64_t, double, bool>;

struct Table {
  std::map<std::string, Value> values;

  bool has(const std::string& key) const { return values.count(key) != 0; }
  std::string get_string(const std::string& key) const;
  std::string get_string_or(const std::string& key, const std::string& fallback) const;
  std::int64_t get_int_or(const std::string& key, std::int64_t fallback) const;
  double get_double_or(const std::string& key, double fallback) const;
};

struct Document {
  Table root;
  std::map<std::string, Table> tables;
  std::map<std::string, std::vector<Table>> arrays;
};

Document parse(std::string_view text);

}  // namespace toml_lite

}  // namespace chunkorder
