#pragma once

#include <string>
#include <vector>

#include "chunkorder/corpus.hpp"

namespace chunkorder {

enum class Tokenizer { whitespace, cjk_char };

Tokenizer default_tokenizer(Language language);

/// whitespace: maximal runs of non-space, non-punctuation codepoints.
/// cjk_char: every non-space, non-punctuation codepoint is its own token.
std::vector<std::string> tokenize(std::string_view text, Tokenizer tokenizer);

/// The sentence surface with tag markup removed (gaps and chunk texts in order).
std::string visible_text(const Sentence& s);

/// Counts tokens/types/tags/FCs over the corpus. Types are case-folded for
/// english. Throws empty_corpus when there are no lines. `texts` is taken
/// from source_meta (defaults to 1; it is provenance, not derivable from a
/// line-based file).
CorpusStats corpus_stats(const Corpus& c, Tokenizer tokenizer);

struct FcDistributionRow {
  TagLabel label;
  std::uint64_t frequency = 0;
  double proportion = 0.0;  // frequency / total FC occurrences (0 when none)
};

/// All eight FC labels, sorted by frequency descending then label name.
std::vector<FcDistributionRow> fc_distribution(const Corpus& c);

/// Round-half-up at `decimals` places; display-side only.
double round_half_up(double value, int decimals);

/// Deterministic fixed-point formatting with half-up rounding.
std::string format_fixed(double value, int decimals);

}  // namespace chunkorder
