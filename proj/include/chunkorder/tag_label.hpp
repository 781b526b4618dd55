#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace chunkorder {

/// The closed annotation vocabulary: eight adverbial functional-chunk roles
/// plus the S/V/O clause anchors.
enum class TagLabel : unsigned char {
  time,
  place,
  manner,
  cause,
  effect,
  condition,
  purpose,
  concession,
  S,
  V,
  O,
};

inline constexpr int kLabelCount = 11;
inline constexpr int kFcCount = 8;

constexpr bool is_functional(TagLabel label) {
  return static_cast<int>(label) < kFcCount;
}

constexpr bool is_anchor(TagLabel label) { return !is_functional(label); }

/// Index of a functional label in canonical order (time..concession).
constexpr int fc_index(TagLabel label) { return static_cast<int>(label); }

constexpr std::array<TagLabel, kFcCount> functional_labels() {
  return {TagLabel::time,   TagLabel::place,     TagLabel::manner,
          TagLabel::cause,  TagLabel::effect,    TagLabel::condition,
          TagLabel::purpose, TagLabel::concession};
}

constexpr std::array<TagLabel, 3> anchor_labels() {
  return {TagLabel::S, TagLabel::V, TagLabel::O};
}

constexpr std::array<TagLabel, kLabelCount> all_labels() {
  return {TagLabel::time,      TagLabel::place,   TagLabel::manner,
          TagLabel::cause,     TagLabel::effect,  TagLabel::condition,
          TagLabel::purpose,   TagLabel::concession,
          TagLabel::S,         TagLabel::V,       TagLabel::O};
}

/// Canonical spelling: lowercase for functional chunks, uppercase S/V/O.
std::string_view to_string(TagLabel label) noexcept;

/// Case-insensitive lookup; nullopt for anything outside the vocabulary.
std::optional<TagLabel> parse_label(std::string_view name) noexcept;

}  // namespace chunkorder
