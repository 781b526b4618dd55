#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "chunkorder/config.hpp"

namespace chunkorder {

struct ReportBundle {
  std::filesystem::path dir;
  std::vector<std::string> files;  // relative paths, sorted
};

/// Builds every table analogue for each configured corpus (stats.json,
/// fc_distribution/positions/tests/condprob/patterns/combos/transitions CSVs,
/// the transition heatmap SVG), semantic outputs when embeddings are
/// configured, and a manifest with input digests. Corpora are parsed
/// strictly; any failure aborts before anything is written. The only
/// non-reproducible byte is the manifest's "generated_at" key.
ReportBundle run_report(const PipelineConfig& cfg);

/// The in-memory bundle (relative path -> bytes) without touching the
/// filesystem; run_report writes exactly these files.
std::map<std::string, std::string> build_report_files(const PipelineConfig& cfg);

/// similarity.csv, projection.csv and projection.svg for one embedding file
/// (keys are bare file names).
std::map<std::string, std::string> build_semantics_files(
    const std::filesystem::path& embeddings, const RoundingConfig& rounding);

}  // namespace chunkorder
