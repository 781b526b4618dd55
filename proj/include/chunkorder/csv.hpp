#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

namespace chunkorder {

/// RFC-4180 style quoting; only applied when the field needs it.
std::string csv_escape(std::string_view field);

/// Appends comma-separated, LF-terminated rows to a string buffer.
class CsvWriter {
 public:
  explicit CsvWriter(std::string& sink);
  void row(std::span<const std::string> fields);
  void row(std::initializer_list<std::string> fields);

 private:
  std::string& sink_;
};

}  // namespace chunkorder
