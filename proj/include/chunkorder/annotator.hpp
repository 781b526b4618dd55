#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chunkorder/corpus.hpp"

namespace chunkorder {

/// Environment variable holding the bearer token; never read from files.
inline constexpr const char* kApiKeyEnv = "CHUNKORDER_API_KEY";

struct AnnotationConfig {
  std::string endpoint_url;
  std::string model_name = "gpt-4o-2024-08-06";
  double temperature = 0.0;  // deterministic decoding by default
  int max_parallel = 4;
  int retry_limit = 2;  // extra attempts after the first
  std::filesystem::path few_shot_path;
  double timeout_s = 30.0;
};

struct FewShotSet {
  std::string instruction;
  std::vector<std::pair<std::string, std::string>> examples;  // raw -> annotated
  std::map<std::string, std::string> per_label_examples;
};

/// Loads and validates a few-shot file: every annotated example must parse
/// strictly and at least three pairs are required.
FewShotSet load_few_shot(const std::filesystem::path& path);

/// Deterministic prompt: instruction, label glossary, worked examples, then
/// the target sentence (which appears exactly once). Throws EmptyFewShot
/// when no examples are present.
std::string build_prompt(std::string_view raw, const FewShotSet& fs);

/// One chat-completion round trip; replies are parsed strictly, and parse
/// failures are retried with the error appended to the conversation. Throws
/// AuthMissing / ServiceError / MalformedAnnotation.
Sentence annotate_sentence(std::string_view raw, const AnnotationConfig& cfg,
                           const FewShotSet& fs);

struct AnnotationFailure {
  std::size_t line = 0;  // 1-based input index
  Errc code;
  std::string message;
};

struct AnnotationRun {
  Corpus corpus;
  std::vector<AnnotationFailure> failures;
};

/// Annotates raw lines with at most max_parallel requests in flight.
/// Output order always matches input order; per-line failures are
/// collected, only AuthMissing aborts.
AnnotationRun annotate_corpus(const std::vector<std::string>& raw_lines,
                              const AnnotationConfig& cfg, const FewShotSet& fs,
                              Language language, std::string name);

struct AgreementReport {
  std::size_t n_sentences = 0;
  double exact_match_rate = 1.0;
  double chunk_f1 = 1.0;
  std::map<TagLabel, double> per_label_f1;  // labels present in either run
};

/// Dual-run consistency: sentence-level exact sequence match plus chunk
/// (label, text) F1, aligned by sentence id. Throws IdMismatch.
AgreementReport agreement(const Corpus& run_a, const Corpus& run_b);

}  // namespace chunkorder
