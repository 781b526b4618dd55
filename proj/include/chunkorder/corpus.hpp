#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chunkorder/error.hpp"
#include "chunkorder/tag_label.hpp"

namespace chunkorder {

enum class Language { english, chinese };
enum class ParseMode { strict, lenient };

std::string_view to_string(Language lang) noexcept;
std::optional<Language> parse_language(std::string_view name) noexcept;

/// One tagged span. Offsets are byte positions of the chunk text inside the
/// raw annotated line (markup excluded), 0-based and end-exclusive, so
/// text == raw.substr(char_start, char_end - char_start).
struct Chunk {
  TagLabel label;
  std::string text;
  std::size_t char_start = 0;
  std::size_t char_end = 0;

  friend bool operator==(const Chunk&, const Chunk&) = default;
};

/// A parsed annotated line. Untagged gaps are implicit: they are the parts
/// of `raw` not covered by any chunk span or its markup.
struct Sentence {
  std::string id;
  std::string raw;
  std::vector<Chunk> chunks;  // sorted by char_start, non-overlapping

  /// Gap texts between/around chunks, in surface order (may be empty strings
  /// only at neither end; zero-length gaps are omitted).
  std::vector<std::string> gaps() const;

  /// Equality ignores the id: two sentences are equal when raw and the chunk
  /// list coincide.
  friend bool operator==(const Sentence& a, const Sentence& b) {
    return a.raw == b.raw && a.chunks == b.chunks;
  }
};

/// Checks the Sentence invariants (ascending, non-overlapping chunks whose
/// text matches the raw slice); throws std::logic_error on violation.
void check_sentence_invariants(const Sentence& s);

struct Diagnostic {
  std::size_t line = 0;  // 1-based input line, 0 when unknown
  Errc code;
  std::string message;
};

struct Corpus {
  Language language = Language::english;
  std::string name;
  std::vector<Sentence> sentences;
  std::map<std::string, std::string> source_meta;
};

/// Descriptive counts; the ratio accessors divide in full precision.
struct CorpusStats {
  std::uint64_t texts = 0;
  std::uint64_t tokens = 0;
  std::uint64_t types = 0;
  std::uint64_t lines = 0;
  std::uint64_t tags = 0;
  std::uint64_t fcs = 0;

  double ttr() const { return tokens ? double(types) / double(tokens) : 0.0; }
  double tag_per_line() const { return lines ? double(tags) / double(lines) : 0.0; }
  double fc_per_line() const { return lines ? double(fcs) / double(lines) : 0.0; }
};

/// Building block for assembling sentences programmatically; a part without
/// a label is a gap.
struct SentencePart {
  std::optional<TagLabel> label;
  std::string text;
};

/// Builds a Sentence (raw + offset-correct chunks) from ordered parts.
Sentence sentence_from_parts(std::string id, std::span<const SentencePart> parts);

}  // namespace chunkorder
