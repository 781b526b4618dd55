#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chunkorder/corpus.hpp"

namespace chunkorder {

/// The abstracted label sequence of a sentence, gaps ignored.
struct TagSequence {
  std::string sentence_id;
  std::vector<TagLabel> labels;
};

TagSequence tag_sequence(const Sentence& s);

/// "<S><V><O>" rendering; also the tie-break key in rankings.
std::string pattern_to_string(std::span<const TagLabel> labels);

struct PatternRow {
  std::vector<TagLabel> pattern;
  std::uint64_t frequency = 0;
};

/// Ranked pattern table. `total` counts the sequences aggregated before any
/// top-k truncation, so sum(frequency) == total when top_k covers all rows.
struct PatternTable {
  std::vector<PatternRow> rows;
  std::uint64_t total = 0;
};

/// One pattern per sentence: the full tag sequence including S/V/O.
/// Sentences with no chunks are skipped. Rows sorted by frequency
/// descending, then pattern string; top_k = 0 keeps every row.
PatternTable pattern_counts(const Corpus& c, std::size_t top_k = 0);

/// One combination per sentence: the FC-only projection (order and repeats
/// kept), counted when its length is at least min_len.
PatternTable fc_combination_counts(const Corpus& c, std::size_t min_len = 2,
                                   std::size_t top_k = 0);

/// Within-sentence first-order transitions over the FC-only projection
/// (S/V/O are transparent; sentence boundaries reset the chain). Rows and
/// columns follow the canonical FC order. Rows with no outgoing pairs are
/// all-zero and flagged undefined.
struct TransitionMatrix {
  Eigen::Matrix<std::int64_t, kFcCount, kFcCount> counts =
      Eigen::Matrix<std::int64_t, kFcCount, kFcCount>::Zero();
  Eigen::Matrix<double, kFcCount, kFcCount> probs =
      Eigen::Matrix<double, kFcCount, kFcCount>::Zero();
  std::array<bool, kFcCount> row_defined{};
};

TransitionMatrix transition_matrix(const Corpus& c);

}  // namespace chunkorder
