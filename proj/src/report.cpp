#include "chunkorder/report.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "chunkorder/corpus_stats.hpp"
#include "chunkorder/csv.hpp"
#include "chunkorder/digest.hpp"
#include "chunkorder/parser.hpp"
#include "chunkorder/position_stats.hpp"
#include "chunkorder/semantic_space.hpp"
#include "chunkorder/sequence_miner.hpp"
#include "chunkorder/svg.hpp"

namespace chunkorder {

namespace {

std::string sig(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string iso_utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string stats_json(const Corpus& corpus, Tokenizer tokenizer) {
  const CorpusStats st = corpus_stats(corpus, tokenizer);
  nlohmann::json j;
  j["texts"] = st.texts;
  j["tokens"] = st.tokens;
  j["types"] = st.types;
  j["ttr"] = st.ttr();
  j["lines"] = st.lines;
  j["tags"] = st.tags;
  j["tag_per_line"] = st.tag_per_line();
  j["fcs"] = st.fcs;
  j["fc_per_line"] = st.fc_per_line();
  return j.dump(2) + "\n";
}

std::string fc_distribution_csv(const Corpus& corpus, int decimals) {
  std::string out;
  CsvWriter csv(out);
  csv.row({"label", "frequency", "proportion"});
  for (const FcDistributionRow& row : fc_distribution(corpus))
    csv.row({std::string(to_string(row.label)), std::to_string(row.frequency),
             format_fixed(row.proportion, decimals)});
  return out;
}

std::string positions_csv(const Corpus& corpus) {
  std::string out;
  CsvWriter csv(out);
  csv.row({"label", "sentence_id", "rel_pos"});
  for (TagLabel label : functional_labels())
    for (const PositionSample& s : relative_positions(corpus, label))
      csv.row({std::string(to_string(label)), s.sentence_id, format_fixed(s.rel_pos, 6)});
  return out;
}

std::string tests_csv(const Corpus& corpus, const Corpus* other) {
  std::string out;
  CsvWriter csv(out);
  csv.row({"label", "chi2", "df", "p", "t", "t_df", "t_p"});
  for (TagLabel label : functional_labels()) {
    const auto samples = relative_positions(corpus, label);
    std::string chi2, df, p;
    if (!samples.empty()) {
      const TestResult r = chi_square_uniform(samples);
      chi2 = sig(r.statistic);
      df = sig(r.df);
      p = sig(r.p_value);
    }
    std::string t, t_df, t_p;
    if (other) {
      const auto other_samples = relative_positions(*other, label);
      if (samples.size() >= 2 && other_samples.size() >= 2) {
        std::vector<double> a, b;
        for (const auto& s : samples) a.push_back(s.rel_pos);
        for (const auto& s : other_samples) b.push_back(s.rel_pos);
        const TestResult r = welch_t_test(a, b);
        t = sig(r.statistic);
        t_df = sig(r.df);
        t_p = sig(r.p_value);
      }
    }
    csv.row({std::string(to_string(label)), chi2, df, p, t, t_df, t_p});
  }
  return out;
}

std::string condprob_csv(const Corpus& corpus, int decimals) {
  std::string out;
  CsvWriter csv(out);
  csv.row({"fc", "anchor", "p_before", "p_after", "n"});
  for (TagLabel fc : functional_labels()) {
    for (TagLabel anchor : anchor_labels()) {
      try {
        const AnchorProbability ap = conditional_anchor_probability(corpus, fc, anchor);
        csv.row({std::string(to_string(fc)), std::string(to_string(anchor)),
                 format_fixed(ap.p_before, decimals), format_fixed(ap.p_after, decimals),
                 std::to_string(ap.n_pairs)});
      } catch (const Error& e) {
        if (e.code() != Errc::no_eligible_sentences) throw;
      }
    }
  }
  return out;
}

std::string pattern_csv(const PatternTable& table, const char* first_column) {
  std::string out;
  CsvWriter csv(out);
  csv.row({first_column, "frequency"});
  for (const PatternRow& row : table.rows)
    csv.row({pattern_to_string(row.pattern), std::to_string(row.frequency)});
  return out;
}

std::string transitions_csv(const TransitionMatrix& m, int decimals) {
  std::string out;
  CsvWriter csv(out);
  csv.row({"from", "to", "count", "prob"});
  for (TagLabel from : functional_labels())
    for (TagLabel to : functional_labels()) {
      const int r = fc_index(from), c = fc_index(to);
      csv.row({std::string(to_string(from)), std::string(to_string(to)),
               std::to_string(m.counts(r, c)),
               m.row_defined[std::size_t(r)] ? format_fixed(m.probs(r, c), decimals)
                                             : std::string{}});
    }
  return out;
}

std::string transitions_matrix_csv(const TransitionMatrix& m, int decimals) {
  std::string out;
  CsvWriter csv(out);
  std::vector<std::string> header = {"from"};
  for (TagLabel to : functional_labels()) header.emplace_back(to_string(to));
  csv.row(header);
  for (TagLabel from : functional_labels()) {
    const int r = fc_index(from);
    std::vector<std::string> row = {std::string(to_string(from))};
    for (TagLabel to : functional_labels())
      row.push_back(m.row_defined[std::size_t(r)]
                        ? format_fixed(m.probs(r, fc_index(to)), decimals)
                        : std::string{});
    csv.row(row);
  }
  return out;
}

}  // namespace

std::map<std::string, std::string> build_semantics_files(
    const std::filesystem::path& embeddings, const RoundingConfig& rounding) {
  const EmbeddingSet es = load_embeddings(embeddings);
  const auto tags = es.tag_universe();
  std::map<std::string, std::string> files;

  std::string sim;
  CsvWriter sim_csv(sim);
  sim_csv.row({"subset_a", "subset_b", "cosine_pct"});
  for (std::size_t i = 0; i < tags.size(); ++i)
    for (std::size_t j = i + 1; j < tags.size(); ++j) {
      const double cos = cosine_similarity(centroid(es, tags[i]), centroid(es, tags[j]));
      sim_csv.row({tags[i], tags[j], format_fixed(100.0 * cos, rounding.similarity)});
    }
  files["similarity.csv"] = std::move(sim);

  const Projection proj = pca_project(es, 2);
  std::string pr;
  CsvWriter pr_csv(pr);
  pr_csv.row({"id", "x", "y", "tags"});
  std::vector<std::pair<double, double>> points;
  std::vector<std::string> color_tags;
  for (Eigen::Index i = 0; i < proj.coords.rows(); ++i) {
    std::string joined;
    for (const std::string& t : es.entries[std::size_t(i)].tags) {
      if (!joined.empty()) joined += ';';
      joined += t;
    }
    pr_csv.row({proj.ids[std::size_t(i)], format_fixed(proj.coords(i, 0), 6),
                format_fixed(proj.coords(i, 1), 6), joined});
    points.emplace_back(proj.coords(i, 0), proj.coords(i, 1));
    color_tags.push_back(es.entries[std::size_t(i)].tags.empty()
                             ? std::string{}
                             : es.entries[std::size_t(i)].tags.front());
  }
  files["projection.csv"] = std::move(pr);
  files["projection.svg"] = projection_scatter_svg(proj.ids, points, color_tags);
  return files;
}

std::map<std::string, std::string> build_report_files(const PipelineConfig& cfg) {
  if (cfg.corpora.empty()) raise(Errc::config_error, "report needs at least one corpus");

  std::map<std::string, std::string> files;
  nlohmann::json manifest;
  manifest["tool_version"] = "0.1.0";
  manifest["inputs"] = nlohmann::json::object();

  // strict loads first so any failure aborts before output assembly
  std::vector<Corpus> corpora;
  for (const CorpusSpec& spec : cfg.corpora) {
    CorpusLoad load = load_corpus_file(spec.path, spec.language, ParseMode::strict, spec.name);
    if (load.corpus.sentences.empty())
      raise(Errc::empty_corpus, "corpus \"" + spec.name + "\" is empty");
    manifest["inputs"][spec.name] = {{"path", spec.path.filename().string()},
                                     {"sha256", sha256_file(spec.path)},
                                     {"language", std::string(to_string(spec.language))},
                                     {"lines", load.corpus.sentences.size()}};
    corpora.push_back(std::move(load.corpus));
  }

  for (std::size_t i = 0; i < corpora.size(); ++i) {
    const Corpus& corpus = corpora[i];
    const Corpus* other = corpora.size() == 2 ? &corpora[1 - i] : nullptr;
    const std::string dir = corpus.name + "/";

    files[dir + "stats.json"] = stats_json(corpus, default_tokenizer(corpus.language));
    files[dir + "fc_distribution.csv"] =
        fc_distribution_csv(corpus, cfg.rounding.proportions);
    files[dir + "positions.csv"] = positions_csv(corpus);
    files[dir + "tests.csv"] = tests_csv(corpus, other);
    files[dir + "condprob.csv"] = condprob_csv(corpus, cfg.rounding.probabilities);
    files[dir + "patterns.csv"] =
        pattern_csv(pattern_counts(corpus, cfg.top_k_patterns), "pattern");
    files[dir + "combos.csv"] =
        pattern_csv(fc_combination_counts(corpus, 2, cfg.top_k_combos), "combination");
    const TransitionMatrix m = transition_matrix(corpus);
    files[dir + "transitions.csv"] = transitions_csv(m, cfg.rounding.probabilities);
    files[dir + "transitions_matrix.csv"] =
        transitions_matrix_csv(m, cfg.rounding.probabilities);
    files[dir + "transitions.svg"] =
        transitions_heatmap_svg(m, cfg.rounding.probabilities);
  }

  if (cfg.embeddings) {
    for (auto& [name, bytes] : build_semantics_files(*cfg.embeddings, cfg.rounding))
      files["semantics/" + name] = std::move(bytes);
    const EmbeddingSet es = load_embeddings(*cfg.embeddings);
    manifest["semantics"] = {{"source", cfg.embeddings->filename().string()},
                             {"sha256", sha256_file(*cfg.embeddings)},
                             {"subsets", es.tag_universe()}};
  }

  nlohmann::json outputs = nlohmann::json::array();
  for (const auto& [path, _] : files) outputs.push_back(path);
  outputs.push_back("manifest.json");
  manifest["outputs"] = outputs;
  manifest["generated_at"] = iso_utc_now();  // the one non-reproducible key
  files["manifest.json"] = manifest.dump(2) + "\n";
  return files;
}

ReportBundle run_report(const PipelineConfig& cfg) {
  const auto files = build_report_files(cfg);

  namespace fs = std::filesystem;
  const bool existed = fs::exists(cfg.output_dir);
  std::vector<fs::path> written;
  try {
    fs::create_directories(cfg.output_dir);
    for (const auto& [rel, bytes] : files) {
      const fs::path target = cfg.output_dir / rel;
      fs::create_directories(target.parent_path());
      std::ofstream out(target, std::ios::binary | std::ios::trunc);
      if (!out) raise(Errc::io_failure, "cannot write " + target.string());
      out.write(bytes.data(), std::streamsize(bytes.size()));
      if (!out) raise(Errc::io_failure, "short write to " + target.string());
      written.push_back(target);
    }
  } catch (...) {
    std::error_code ec;
    if (!existed) {
      fs::remove_all(cfg.output_dir, ec);
    } else {
      for (const fs::path& p : written) fs::remove(p, ec);
    }
    throw;
  }

  ReportBundle bundle;
  bundle.dir = cfg.output_dir;
  for (const auto& [rel, _] : files) bundle.files.push_back(rel);
  return bundle;
}

}  // namespace chunkorder
