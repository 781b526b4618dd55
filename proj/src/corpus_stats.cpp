#include "chunkorder/corpus_stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_set>

#include "chunkorder/unicode.hpp"

namespace chunkorder {

Tokenizer default_tokenizer(Language language) {
  return language == Language::english ? Tokenizer::whitespace : Tokenizer::cjk_char;
}

std::vector<std::string> tokenize(std::string_view text, Tokenizer tokenizer) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    const char32_t cp = decode_utf8(text, pos);
    const bool separator = is_space_cp(cp) || is_punct_cp(cp);
    if (tokenizer == Tokenizer::whitespace) {
      if (separator) {
        if (!current.empty()) tokens.push_back(std::move(current));
        current.clear();
      } else {
        current.append(text, start, pos - start);
      }
    } else {
      if (!separator) tokens.emplace_back(text.substr(start, pos - start));
    }
  }
  if (tokenizer == Tokenizer::whitespace && !current.empty())
    tokens.push_back(std::move(current));
  return tokens;
}

std::string visible_text(const Sentence& s) {
  std::string out;
  std::size_t pos = 0;
  for (const Chunk& c : s.chunks) {
    const auto name_len = to_string(c.label).size();
    const std::size_t markup_start = c.char_start - (name_len + 2);
    out.append(s.raw, pos, markup_start - pos);
    out += c.text;
    pos = c.char_end + name_len + 3;
  }
  out.append(s.raw, pos, s.raw.size() - pos);
  return out;
}

CorpusStats corpus_stats(const Corpus& c, Tokenizer tokenizer) {
  if (c.sentences.empty())
    raise(Errc::empty_corpus, "corpus \"" + c.name + "\" has no lines");

  CorpusStats stats;
  stats.lines = c.sentences.size();
  stats.texts = 1;
  if (auto it = c.source_meta.find("texts"); it != c.source_meta.end())
    stats.texts = std::strtoull(it->second.c_str(), nullptr, 10);

  const bool fold = c.language == Language::english;
  std::unordered_set<std::string> types;
  for (const Sentence& s : c.sentences) {
    for (std::string& tok : tokenize(visible_text(s), tokenizer)) {
      ++stats.tokens;
      types.insert(fold ? fold_ascii(tok) : std::move(tok));
    }
    stats.tags += s.chunks.size();
    for (const Chunk& ch : s.chunks)
      if (is_functional(ch.label)) ++stats.fcs;
  }
  stats.types = types.size();
  return stats;
}

std::vector<FcDistributionRow> fc_distribution(const Corpus& c) {
  std::array<std::uint64_t, kFcCount> freq{};
  std::uint64_t total = 0;
  for (const Sentence& s : c.sentences)
    for (const Chunk& ch : s.chunks)
      if (is_functional(ch.label)) {
        ++freq[fc_index(ch.label)];
        ++total;
      }

  std::vector<FcDistributionRow> rows;
  rows.reserve(kFcCount);
  for (TagLabel label : functional_labels()) {
    const std::uint64_t f = freq[fc_index(label)];
    rows.push_back({label, f, total ? double(f) / double(total) : 0.0});
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return to_string(a.label) < to_string(b.label);
  });
  return rows;
}

double round_half_up(double value, int decimals) {
  long double scale = 1.0L;
  for (int i = 0; i < decimals; ++i) scale *= 10.0L;
  const long double scaled = static_cast<long double>(value) * scale;
  const long double rounded =
      scaled >= 0 ? std::floor(scaled + 0.5L) : std::ceil(scaled - 0.5L);
  return static_cast<double>(rounded / scale);
}

std::string format_fixed(double value, int decimals) {
  long double scale = 1.0L;
  for (int i = 0; i < decimals; ++i) scale *= 10.0L;
  const long double scaled = static_cast<long double>(value) * scale;
  long long units = static_cast<long long>(
      scaled >= 0 ? std::floor(scaled + 0.5L) : std::ceil(scaled - 0.5L));

  const bool negative = units < 0;
  unsigned long long mag = negative ? -static_cast<unsigned long long>(units) : units;
  std::string digits = std::to_string(mag);
  std::string out;
  if (negative) out += '-';
  if (decimals == 0) {
    out += digits;
    return out;
  }
  if (digits.size() <= static_cast<std::size_t>(decimals))
    digits.insert(0, decimals + 1 - digits.size(), '0');
  out.append(digits, 0, digits.size() - decimals);
  out += '.';
  out.append(digits, digits.size() - decimals, decimals);
  return out;
}

}  // namespace chunkorder
