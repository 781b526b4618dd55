#include "chunkorder/sequence_miner.hpp"

#include <algorithm>
#include <map>

namespace chunkorder {

TagSequence tag_sequence(const Sentence& s) {
  TagSequence seq;
  seq.sentence_id = s.id;
  seq.labels.reserve(s.chunks.size());
  for (const Chunk& c : s.chunks) seq.labels.push_back(c.label);
  return seq;
}

std::string pattern_to_string(std::span<const TagLabel> labels) {
  std::string out;
  for (TagLabel l : labels) {
    out += '<';
    out += to_string(l);
    out += '>';
  }
  return out;
}

namespace {

PatternTable rank(std::map<std::vector<TagLabel>, std::uint64_t>&& counts,
                  std::uint64_t total, std::size_t top_k) {
  PatternTable table;
  table.total = total;
  table.rows.reserve(counts.size());
  for (auto& [pattern, frequency] : counts)
    table.rows.push_back({pattern, frequency});
  std::sort(table.rows.begin(), table.rows.end(),
            [](const PatternRow& a, const PatternRow& b) {
              if (a.frequency != b.frequency) return a.frequency > b.frequency;
              return pattern_to_string(a.pattern) < pattern_to_string(b.pattern);
            });
  if (top_k && table.rows.size() > top_k) table.rows.resize(top_k);
  return table;
}

std::vector<TagLabel> fc_projection(const Sentence& s) {
  std::vector<TagLabel> fc;
  for (const Chunk& c : s.chunks)
    if (is_functional(c.label)) fc.push_back(c.label);
  return fc;
}

}  // namespace

PatternTable pattern_counts(const Corpus& c, std::size_t top_k) {
  std::map<std::vector<TagLabel>, std::uint64_t> counts;
  std::uint64_t total = 0;
  for (const Sentence& s : c.sentences) {
    TagSequence seq = tag_sequence(s);
    if (seq.labels.empty()) continue;
    ++counts[std::move(seq.labels)];
    ++total;
  }
  return rank(std::move(counts), total, top_k);
}

PatternTable fc_combination_counts(const Corpus& c, std::size_t min_len,
                                   std::size_t top_k) {
  std::map<std::vector<TagLabel>, std::uint64_t> counts;
  std::uint64_t total = 0;
  for (const Sentence& s : c.sentences) {
    std::vector<TagLabel> fc = fc_projection(s);
    if (fc.size() < min_len) continue;
    ++counts[std::move(fc)];
    ++total;
  }
  return rank(std::move(counts), total, top_k);
}

TransitionMatrix transition_matrix(const Corpus& c) {
  TransitionMatrix m;
  for (const Sentence& s : c.sentences) {
    const std::vector<TagLabel> fc = fc_projection(s);
    for (std::size_t i = 1; i < fc.size(); ++i)
      ++m.counts(fc_index(fc[i - 1]), fc_index(fc[i]));
  }
  for (int row = 0; row < kFcCount; ++row) {
    const std::int64_t row_sum = m.counts.row(row).sum();
    m.row_defined[row] = row_sum > 0;
    if (row_sum > 0)
      m.probs.row(row) = m.counts.row(row).cast<double>() / double(row_sum);
  }
  return m;
}

}  // namespace chunkorder
