#include "chunkorder/corpus.hpp"

#include <stdexcept>

namespace chunkorder {

std::string_view to_string(Language lang) noexcept {
  return lang == Language::english ? "english" : "chinese";
}

std::optional<Language> parse_language(std::string_view name) noexcept {
  if (name == "english") return Language::english;
  if (name == "chinese") return Language::chinese;
  return std::nullopt;
}

std::vector<std::string> Sentence::gaps() const {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (const Chunk& c : chunks) {
    const auto name_len = to_string(c.label).size();
    const std::size_t markup_start = c.char_start - (name_len + 2);
    if (markup_start > pos) out.push_back(raw.substr(pos, markup_start - pos));
    pos = c.char_end + name_len + 3;
  }
  if (pos < raw.size()) out.push_back(raw.substr(pos));
  return out;
}

void check_sentence_invariants(const Sentence& s) {
  std::size_t prev_end = 0;
  for (const Chunk& c : s.chunks) {
    if (c.char_start >= c.char_end)
      throw std::logic_error("chunk span empty or inverted in sentence " + s.id);
    const auto name_len = to_string(c.label).size();
    if (c.char_start < name_len + 2 || c.char_end + name_len + 3 > s.raw.size())
      throw std::logic_error("chunk span exceeds raw line in sentence " + s.id);
    if (c.char_start - (name_len + 2) < prev_end)
      throw std::logic_error("chunks overlap or are unsorted in sentence " + s.id);
    if (s.raw.compare(c.char_start, c.char_end - c.char_start, c.text) != 0)
      throw std::logic_error("chunk text does not match raw slice in sentence " + s.id);
    prev_end = c.char_end + name_len + 3;
  }
}

Sentence sentence_from_parts(std::string id, std::span<const SentencePart> parts) {
  Sentence s;
  s.id = std::move(id);
  for (const SentencePart& p : parts) {
    if (!p.label) {
      s.raw += p.text;
      continue;
    }
    const auto name = to_string(*p.label);
    s.raw.append("<").append(name).append(">");
    const std::size_t start = s.raw.size();
    s.raw += p.text;
    s.chunks.push_back({*p.label, p.text, start, s.raw.size()});
    s.raw.append("</").append(name).append(">");
  }
  return s;
}

}  // namespace chunkorder
