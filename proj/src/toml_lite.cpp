#include "chunkorder/toml_lite.hpp"

#include <algorithm>
#include <charconv>

#include "chunkorder/error.hpp"

namespace chunkorder::toml_lite {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

bool is_bare_key_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '_' || c == '-';
}

std::string parse_basic_string(std::string_view body, std::size_t line_no) {
  std::string out;
  for (std::size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (c != '\\') {
      out += c;
      continue;
    }
    if (++i >= body.size())
      raise(Errc::config_error, "line " + std::to_string(line_no) + ": dangling escape");
    switch (body[i]) {
      case '"': out += '"'; break;
      case '\\': out += '\\'; break;
      case 'n': out += '\n'; break;
      case 't': out += '\t'; break;
      case 'r': out += '\r'; break;
      default:
        raise(Errc::config_error,
              "line " + std::to_string(line_no) + ": unsupported escape \\" +
                  std::string(1, body[i]));
    }
  }
  return out;
}

Value parse_value(std::string_view text, std::size_t line_no) {
  text = trim(text);
  if (text.empty())
    raise(Errc::config_error, "line " + std::to_string(line_no) + ": missing value");
  if (text.front() == '"') {
    const auto end = text.rfind('"');
    if (end == 0)
      raise(Errc::config_error, "line " + std::to_string(line_no) + ": unterminated string");
    if (!trim(text.substr(end + 1)).empty())
      raise(Errc::config_error,
            "line " + std::to_string(line_no) + ": trailing content after string");
    return parse_basic_string(text.substr(1, end - 1), line_no);
  }
  if (text == "true") return true;
  if (text == "false") return false;

  const std::string numeric(text);
  if (numeric.find_first_of(".eE") == std::string::npos) {
    std::int64_t iv = 0;
    const auto [p, ec] = std::from_chars(numeric.data(), numeric.data() + numeric.size(), iv);
    if (ec == std::errc{} && p == numeric.data() + numeric.size()) return iv;
  }
  double dv = 0.0;
  const auto [p, ec] = std::from_chars(numeric.data(), numeric.data() + numeric.size(), dv);
  if (ec == std::errc{} && p == numeric.data() + numeric.size()) return dv;
  raise(Errc::config_error,
        "line " + std::to_string(line_no) + ": cannot parse value \"" + numeric + "\"");
}

}  // namespace

std::string Table::get_string(const std::string& key) const {
  const auto it = values.find(key);
  if (it == values.end() || !std::holds_alternative<std::string>(it->second))
    raise(Errc::config_error, "missing required string key \"" + key + "\"");
  return std::get<std::string>(it->second);
}

std::string Table::get_string_or(const std::string& key, const std::string& fallback) const {
  const auto it = values.find(key);
  if (it == values.end()) return fallback;
  if (!std::holds_alternative<std::string>(it->second))
    raise(Errc::config_error, "key \"" + key + "\" must be a string");
  return std::get<std::string>(it->second);
}

std::int64_t Table::get_int_or(const std::string& key, std::int64_t fallback) const {
  const auto it = values.find(key);
  if (it == values.end()) return fallback;
  if (!std::holds_alternative<std::int64_t>(it->second))
    raise(Errc::config_error, "key \"" + key + "\" must be an integer");
  return std::get<std::int64_t>(it->second);
}

double Table::get_double_or(const std::string& key, double fallback) const {
  const auto it = values.find(key);
  if (it == values.end()) return fallback;
  if (std::holds_alternative<double>(it->second)) return std::get<double>(it->second);
  if (std::holds_alternative<std::int64_t>(it->second))
    return double(std::get<std::int64_t>(it->second));
  raise(Errc::config_error, "key \"" + key + "\" must be a number");
}

Document parse(std::string_view text) {
  Document doc;
  Table* current = &doc.root;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    // strip comments outside strings
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"' && (i == 0 || line[i - 1] != '\\')) in_string = !in_string;
      if (line[i] == '#' && !in_string) {
        line = line.substr(0, i);
        break;
      }
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      const bool array = line.size() > 1 && line[1] == '[';
      const std::string_view close = array ? "]]" : "]";
      const auto end = line.find(close);
      if (end == std::string_view::npos || !trim(line.substr(end + close.size())).empty())
        raise(Errc::config_error, "line " + std::to_string(line_no) + ": malformed header");
      const std::string name(trim(line.substr(array ? 2 : 1, end - (array ? 2 : 1))));
      if (name.empty())
        raise(Errc::config_error, "line " + std::to_string(line_no) + ": empty table name");
      if (array) {
        doc.arrays[name].emplace_back();
        current = &doc.arrays[name].back();
      } else {
        current = &doc.tables[name];
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      raise(Errc::config_error, "line " + std::to_string(line_no) + ": expected key = value");
    const std::string_view key = trim(line.substr(0, eq));
    if (key.empty() ||
        !std::all_of(key.begin(), key.end(), [](char c) { return is_bare_key_char(c); }))
      raise(Errc::config_error,
            "line " + std::to_string(line_no) + ": invalid key \"" + std::string(key) + "\"");
    current->values[std::string(key)] = parse_value(line.substr(eq + 1), line_no);
  }
  return doc;
}

}  // namespace chunkorder::toml_lite
