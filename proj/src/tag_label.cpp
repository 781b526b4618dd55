#include "chunkorder/tag_label.hpp"

namespace chunkorder {

namespace {

constexpr std::array<std::string_view, kLabelCount> kNames = {
    "time", "place", "manner", "cause", "effect", "condition",
    "purpose", "concession", "S", "V", "O"};

char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? char(c + 32) : c; }

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (ascii_lower(a[i]) != ascii_lower(b[i])) return false;
  return true;
}

}  // namespace

std::string_view to_string(TagLabel label) noexcept {
  return kNames[static_cast<int>(label)];
}

std::optional<TagLabel> parse_label(std::string_view name) noexcept {
  for (int i = 0; i < kLabelCount; ++i)
    if (iequals(name, kNames[i])) return static_cast<TagLabel>(i);
  return std::nullopt;
}

}  // namespace chunkorder
