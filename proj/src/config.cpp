#include "chunkorder/config.hpp"

#include <fstream>

#include "chunkorder/toml_lite.hpp"

namespace chunkorder {

namespace {

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  const std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

}  // namespace

PipelineConfig load_config(const std::filesystem::path& path, bool require_corpora) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::io_failure, "cannot open config " + path.string());
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  const auto doc = toml_lite::parse(text);
  const auto base = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");

  PipelineConfig cfg;
  cfg.output_dir = resolve(base, doc.root.get_string_or("output_dir", "out"));
  cfg.top_k_patterns = std::size_t(doc.root.get_int_or("top_k_patterns", 20));
  cfg.top_k_combos = std::size_t(doc.root.get_int_or("top_k_combos", 50));

  if (const auto it = doc.arrays.find("corpora"); it != doc.arrays.end()) {
    for (const auto& table : it->second) {
      CorpusSpec spec;
      spec.path = resolve(base, table.get_string("path"));
      spec.name = table.get_string_or("name", spec.path.stem().string());
      const auto lang = parse_language(table.get_string("language"));
      if (!lang)
        raise(Errc::config_error,
              "corpus \"" + spec.name + "\": language must be english or chinese");
      spec.language = *lang;
      cfg.corpora.push_back(std::move(spec));
    }
  }
  if (require_corpora && cfg.corpora.empty())
    raise(Errc::config_error, "config has no [[corpora]] entries");

  if (const auto it = doc.tables.find("annotation"); it != doc.tables.end()) {
    AnnotationConfig ann;
    ann.endpoint_url = it->second.get_string("endpoint_url");
    ann.model_name = it->second.get_string_or("model_name", ann.model_name);
    ann.temperature = it->second.get_double_or("temperature", 0.0);
    ann.max_parallel = int(it->second.get_int_or("max_parallel", 4));
    ann.retry_limit = int(it->second.get_int_or("retry_limit", 2));
    ann.timeout_s = it->second.get_double_or("timeout_s", 30.0);
    if (it->second.has("few_shot_path"))
      ann.few_shot_path = resolve(base, it->second.get_string("few_shot_path"));
    if (ann.max_parallel < 1)
      raise(Errc::config_error, "annotation.max_parallel must be >= 1");
    if (ann.retry_limit < 0 || ann.retry_limit > 10)
      raise(Errc::config_error, "annotation.retry_limit must be in [0, 10]");
    if (ann.temperature < 0.0 || ann.temperature > 2.0)
      raise(Errc::config_error, "annotation.temperature must be in [0, 2]");
    cfg.annotation = std::move(ann);
  }

  if (const auto it = doc.tables.find("embeddings"); it != doc.tables.end())
    cfg.embeddings = resolve(base, it->second.get_string("path"));

  if (const auto it = doc.tables.find("rounding"); it != doc.tables.end()) {
    cfg.rounding.proportions = int(it->second.get_int_or("proportions", 2));
    cfg.rounding.probabilities = int(it->second.get_int_or("probabilities", 2));
    cfg.rounding.similarity = int(it->second.get_int_or("similarity", 2));
  }
  return cfg;
}

}  // namespace chunkorder
