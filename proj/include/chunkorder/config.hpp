#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "chunkorder/annotator.hpp"
#include "chunkorder/corpus.hpp"

namespace chunkorder {

struct CorpusSpec {
  std::string name;
  std::filesystem::path path;
  Language language = Language::english;
};

/// Display decimals per output table family.
struct RoundingConfig {
  int proportions = 2;
  int probabilities = 2;
  int similarity = 2;
};

struct PipelineConfig {
  std::vector<CorpusSpec> corpora;
  std::optional<AnnotationConfig> annotation;
  std::optional<std::filesystem::path> embeddings;
  std::filesystem::path output_dir = "out";
  std::size_t top_k_patterns = 20;
  std::size_t top_k_combos = 50;
  RoundingConfig rounding;
};

/// Parses a chunkorder.toml file. Relative paths inside the file are
/// resolved against the file's directory. Analysis commands require a
/// nonempty [[corpora]] list; `require_corpora` relaxes that for
/// annotation-only use.
PipelineConfig load_config(const std::filesystem::path& path, bool require_corpora = true);

}  // namespace chunkorder
