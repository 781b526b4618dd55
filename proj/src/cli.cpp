#include "chunkorder/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chunkorder/annotator.hpp"
#include "chunkorder/config.hpp"
#include "chunkorder/corpus_stats.hpp"
#include "chunkorder/csv.hpp"
#include "chunkorder/parser.hpp"
#include "chunkorder/position_stats.hpp"
#include "chunkorder/report.hpp"
#include "chunkorder/sequence_miner.hpp"
#include "chunkorder/svg.hpp"

namespace chunkorder {

namespace {

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::service_error:
    case Errc::auth_missing:
      return 3;
    default:
      return 2;
  }
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(Errc::io_failure, "cannot write " + path);
  out << content;
}

Language language_or_throw(const std::string& name) {
  const auto lang = parse_language(name);
  if (!lang) raise(Errc::config_error, "language must be english or chinese");
  return *lang;
}

ParseMode mode_or_throw(const std::string& name) {
  if (name == "strict") return ParseMode::strict;
  if (name == "lenient") return ParseMode::lenient;
  raise(Errc::config_error, "mode must be strict or lenient");
}

Corpus load_strict(const std::string& in, const std::string& language,
                   const std::string& name) {
  return load_corpus_file(in, language_or_throw(language), ParseMode::strict, name)
      .corpus;
}

void print_diagnostics(const std::vector<Diagnostic>& diagnostics) {
  for (const Diagnostic& d : diagnostics)
    std::cerr << "line " << d.line << ": " << errc_name(d.code) << ": " << d.message
              << "\n";
}

std::string stats_json_text(const Corpus& corpus, Tokenizer tokenizer) {
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

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::io_failure, "cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

nlohmann::json agreement_json(const AgreementReport& report) {
  nlohmann::json j;
  j["n_sentences"] = report.n_sentences;
  j["exact_match_rate"] = report.exact_match_rate;
  j["chunk_f1"] = report.chunk_f1;
  j["per_label_f1"] = nlohmann::json::object();
  for (const auto& [label, f1] : report.per_label_f1)
    j["per_label_f1"][std::string(to_string(label))] = f1;
  return j;
}

/// Restricts both runs to sentence ids present in each, so a line that
/// failed in only one run does not abort the consistency check.
AgreementReport agreement_on_common(const Corpus& a, const Corpus& b) {
  std::map<std::string, const Sentence*> in_b;
  for (const Sentence& s : b.sentences) in_b[s.id] = &s;
  Corpus ca, cb;
  ca.language = a.language;
  cb.language = b.language;
  for (const Sentence& s : a.sentences) {
    const auto it = in_b.find(s.id);
    if (it == in_b.end()) continue;
    ca.sentences.push_back(s);
    cb.sentences.push_back(*it->second);
  }
  return agreement(ca, cb);
}

int run_annotate(const std::string& in, const std::string& out,
                 const std::string& config_path, bool dual,
                 const std::string& agreement_out) {
  const PipelineConfig cfg = load_config(config_path, /*require_corpora=*/false);
  if (!cfg.annotation)
    raise(Errc::config_error, "config has no [annotation] section");
  if (cfg.annotation->few_shot_path.empty())
    raise(Errc::config_error, "annotation.few_shot_path is required");
  const FewShotSet fs = load_few_shot(cfg.annotation->few_shot_path);
  const std::vector<std::string> lines = read_lines(in);

  const AnnotationRun run_a = annotate_corpus(lines, *cfg.annotation, fs,
                                              Language::english, "run_a");
  for (const AnnotationFailure& f : run_a.failures)
    std::cerr << "line " << f.line << ": " << f.message << "\n";

  std::string tagged;
  std::size_t next_ok = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string id = "run_a-L" + std::to_string(i + 1);
    if (next_ok < run_a.corpus.sentences.size() &&
        run_a.corpus.sentences[next_ok].id == id) {
      tagged += serialize_sentence(run_a.corpus.sentences[next_ok]);
      ++next_ok;
    } else {
      tagged += lines[i];  // failed lines fall back to the raw input
    }
    tagged += '\n';
  }
  write_output(out, tagged);

  if (dual) {
    AnnotationRun run_b = annotate_corpus(lines, *cfg.annotation, fs,
                                          Language::english, "run_a");
    const AgreementReport report = agreement_on_common(run_a.corpus, run_b.corpus);
    write_output(agreement_out, agreement_json(report).dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Constituent-order analysis toolkit for tagged news corpora"};
  app.name("chunkorder");
  app.require_subcommand(1);
  std::function<int()> action;

  // ---- parse ----
  auto* parse_cmd = app.add_subcommand("parse", "Parse a corpus and re-emit canonical lines");
  {
    auto in = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>("strict");
    parse_cmd->add_option("--in", *in, "annotated corpus file")->required();
    parse_cmd->add_option("--out", *out, "output file (default stdout)");
    parse_cmd->add_option("--mode", *mode, "strict|lenient")
        ->check(CLI::IsMember({"strict", "lenient"}));
    parse_cmd->callback([&action, in, out, mode] {
      action = [in, out, mode]() {
        const auto load =
            load_corpus_file(*in, Language::english, mode_or_throw(*mode), "");
        print_diagnostics(load.diagnostics);
        std::string text;
        for (const Sentence& s : load.corpus.sentences)
          text += serialize_sentence(s) + "\n";
        write_output(*out, text);
        return 0;
      };
    });
  }

  // ---- validate ----
  auto* validate_cmd = app.add_subcommand("validate", "Check a corpus against the tag grammar");
  {
    auto in = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>("strict");
    validate_cmd->add_option("--in", *in, "annotated corpus file")->required();
    validate_cmd->add_option("--mode", *mode, "strict|lenient")
        ->check(CLI::IsMember({"strict", "lenient"}));
    validate_cmd->callback([&action, in, mode] {
      action = [in, mode]() {
        const auto load =
            load_corpus_file(*in, Language::english, mode_or_throw(*mode), "");
        print_diagnostics(load.diagnostics);
        if (!load.diagnostics.empty()) return 2;
        std::cout << "OK: " << load.corpus.sentences.size() << " sentences\n";
        return 0;
      };
    });
  }

  // ---- annotate ----
  auto* annotate_cmd = app.add_subcommand("annotate", "Annotate raw sentences via the configured endpoint");
  {
    auto in = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto config_path = std::make_shared<std::string>();
    auto dual = std::make_shared<bool>(false);
    auto agreement_out = std::make_shared<std::string>();
    annotate_cmd->add_option("--in", *in, "raw sentences, one per line")->required();
    annotate_cmd->add_option("--out", *out, "annotated output file")->required();
    annotate_cmd->add_option("--config", *config_path, "chunkorder.toml")->required();
    annotate_cmd->add_flag("--dual", *dual, "annotate twice and score agreement");
    annotate_cmd->add_option("--agreement-out", *agreement_out,
                             "agreement report JSON (default stdout)");
    annotate_cmd->callback([&action, in, out, config_path, dual, agreement_out] {
      action = [in, out, config_path, dual, agreement_out]() {
        return run_annotate(*in, *out, *config_path, *dual, *agreement_out);
      };
    });
  }

  // ---- per-corpus analyses ----
  struct AnalysisArgs {
    std::string in, language, name, out;
  };
  auto add_analysis = [&app](const char* cmd_name, const char* description,
                             auto configure) {
    auto* cmd = app.add_subcommand(cmd_name, description);
    auto a = std::make_shared<AnalysisArgs>();
    cmd->add_option("--in", a->in, "annotated corpus file")->required();
    cmd->add_option("--language", a->language, "english|chinese")
        ->required()
        ->check(CLI::IsMember({"english", "chinese"}));
    cmd->add_option("--name", a->name, "corpus name (default: file stem)");
    cmd->add_option("--out", a->out, "output file (default stdout)");
    configure(cmd, a);
    return cmd;
  };

  add_analysis("stats", "Descriptive corpus statistics", [&action](CLI::App* cmd, auto a) {
    auto tokenizer = std::make_shared<std::string>();
    cmd->add_option("--tokenizer", *tokenizer, "whitespace|cjk_char (default per language)")
        ->check(CLI::IsMember({"whitespace", "cjk_char"}));
    cmd->callback([&action, a, tokenizer] {
      action = [a, tokenizer]() {
        const Corpus corpus = load_strict(a->in, a->language, a->name);
        const Tokenizer tok = tokenizer->empty()
                                  ? default_tokenizer(corpus.language)
                                  : (*tokenizer == "whitespace" ? Tokenizer::whitespace
                                                                : Tokenizer::cjk_char);
        write_output(a->out, stats_json_text(corpus, tok));
        return 0;
      };
    });
  });

  add_analysis("positions", "Relative positions of functional chunks",
               [&action](CLI::App* cmd, auto a) {
    auto label = std::make_shared<std::string>();
    cmd->add_option("--label", *label, "restrict to one FC label");
    cmd->callback([&action, a, label] {
      action = [a, label]() {
        const Corpus corpus = load_strict(a->in, a->language, a->name);
        std::string out;
        CsvWriter csv(out);
        csv.row({"label", "sentence_id", "rel_pos"});
        for (TagLabel l : functional_labels()) {
          if (!label->empty() && to_string(l) != *label) continue;
          for (const PositionSample& s : relative_positions(corpus, l))
            csv.row({std::string(to_string(l)), s.sentence_id,
                     format_fixed(s.rel_pos, 6)});
        }
        write_output(a->out, out);
        return 0;
      };
    });
  });

  add_analysis("tests", "Chi-square uniformity and cross-corpus Welch tests",
               [&action](CLI::App* cmd, auto a) {
    auto vs = std::make_shared<std::string>();
    auto vs_language = std::make_shared<std::string>();
    cmd->add_option("--vs", *vs, "second corpus for the cross-linguistic t columns");
    cmd->add_option("--vs-language", *vs_language, "language of --vs")
        ->check(CLI::IsMember({"english", "chinese"}));
    cmd->callback([&action, a, vs, vs_language] {
      action = [a, vs, vs_language]() {
        const Corpus corpus = load_strict(a->in, a->language, a->name);
        std::string out;
        CsvWriter csv(out);
        csv.row({"label", "chi2", "df", "p", "t", "t_df", "t_p"});
        std::optional<Corpus> other;
        if (!vs->empty())
          other = load_strict(*vs, vs_language->empty() ? a->language : *vs_language,
                              "");
        for (TagLabel l : functional_labels()) {
          const auto samples = relative_positions(corpus, l);
          std::array<std::string, 6> cell{};
          auto sig = [](double v) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.9g", v);
            return std::string(buf);
          };
          if (!samples.empty()) {
            const TestResult r = chi_square_uniform(samples);
            cell[0] = sig(r.statistic);
            cell[1] = sig(r.df);
            cell[2] = sig(r.p_value);
          }
          if (other) {
            const auto other_samples = relative_positions(*other, l);
            if (samples.size() >= 2 && other_samples.size() >= 2) {
              std::vector<double> xs, ys;
              for (const auto& s : samples) xs.push_back(s.rel_pos);
              for (const auto& s : other_samples) ys.push_back(s.rel_pos);
              const TestResult r = welch_t_test(xs, ys);
              cell[3] = sig(r.statistic);
              cell[4] = sig(r.df);
              cell[5] = sig(r.p_value);
            }
          }
          csv.row({std::string(to_string(l)), cell[0], cell[1], cell[2], cell[3],
                   cell[4], cell[5]});
        }
        write_output(a->out, out);
        return 0;
      };
    });
  });

  add_analysis("condprob", "FC-before/after-anchor conditional probabilities",
               [&action](CLI::App* cmd, auto a) {
    auto decimals = std::make_shared<int>(2);
    cmd->add_option("--decimals", *decimals, "probability decimals (default 2)");
    cmd->callback([&action, a, decimals] {
      action = [a, decimals]() {
        const Corpus corpus = load_strict(a->in, a->language, a->name);
        std::string out;
        CsvWriter csv(out);
        csv.row({"fc", "anchor", "p_before", "p_after", "n"});
        for (TagLabel fc : functional_labels())
          for (TagLabel anchor : anchor_labels()) {
            try {
              const AnchorProbability ap =
                  conditional_anchor_probability(corpus, fc, anchor);
              csv.row({std::string(to_string(fc)), std::string(to_string(anchor)),
                       format_fixed(ap.p_before, *decimals),
                       format_fixed(ap.p_after, *decimals),
                       std::to_string(ap.n_pairs)});
            } catch (const Error& e) {
              if (e.code() != Errc::no_eligible_sentences) throw;
            }
          }
        write_output(a->out, out);
        return 0;
      };
    });
  });

  add_analysis("patterns", "Full tag-sequence pattern frequencies",
               [&action](CLI::App* cmd, auto a) {
    auto top_k = std::make_shared<std::size_t>(20);
    cmd->add_option("--top-k", *top_k, "rows to keep, 0 = all (default 20)");
    cmd->callback([&action, a, top_k] {
      action = [a, top_k]() {
        const Corpus corpus = load_strict(a->in, a->language, a->name);
        std::string out;
        CsvWriter csv(out);
        csv.row({"pattern", "frequency"});
        for (const PatternRow& row : pattern_counts(corpus, *top_k).rows)
          csv.row({pattern_to_string(row.pattern), std::to_string(row.frequency)});
        write_output(a->out, out);
        return 0;
      };
    });
  });

  add_analysis("combos", "Multi-FC combination frequencies",
               [&action](CLI::App* cmd, auto a) {
    auto top_k = std::make_shared<std::size_t>(50);
    auto min_len = std::make_shared<std::size_t>(2);
    cmd->add_option("--top-k", *top_k, "rows to keep, 0 = all (default 50)");
    cmd->add_option("--min-len", *min_len, "minimum FC count per sentence (default 2)");
    cmd->callback([&action, a, top_k, min_len] {
      action = [a, top_k, min_len]() {
        const Corpus corpus = load_strict(a->in, a->language, a->name);
        std::string out;
        CsvWriter csv(out);
        csv.row({"combination", "frequency"});
        for (const PatternRow& row :
             fc_combination_counts(corpus, *min_len, *top_k).rows)
          csv.row({pattern_to_string(row.pattern), std::to_string(row.frequency)});
        write_output(a->out, out);
        return 0;
      };
    });
  });

  add_analysis("transitions", "FC-to-FC Markov transition matrix",
               [&action](CLI::App* cmd, auto a) {
    auto matrix_out = std::make_shared<std::string>();
    auto svg_out = std::make_shared<std::string>();
    auto decimals = std::make_shared<int>(2);
    cmd->add_option("--matrix-out", *matrix_out, "plain 8x8 probability CSV");
    cmd->add_option("--svg-out", *svg_out, "heatmap SVG");
    cmd->add_option("--decimals", *decimals, "probability decimals (default 2)");
    cmd->callback([&action, a, matrix_out, svg_out, decimals] {
      action = [a, matrix_out, svg_out, decimals]() {
        const Corpus corpus = load_strict(a->in, a->language, a->name);
        const TransitionMatrix m = transition_matrix(corpus);
        std::string out;
        CsvWriter csv(out);
        csv.row({"from", "to", "count", "prob"});
        for (TagLabel from : functional_labels())
          for (TagLabel to : functional_labels()) {
            const int r = fc_index(from), c = fc_index(to);
            csv.row({std::string(to_string(from)), std::string(to_string(to)),
                     std::to_string(m.counts(r, c)),
                     m.row_defined[std::size_t(r)]
                         ? format_fixed(m.probs(r, c), *decimals)
                         : std::string{}});
          }
        write_output(a->out, out);
        if (!matrix_out->empty()) {
          std::string plain;
          CsvWriter mcsv(plain);
          std::vector<std::string> header = {"from"};
          for (TagLabel to : functional_labels()) header.emplace_back(to_string(to));
          mcsv.row(header);
          for (TagLabel from : functional_labels()) {
            const int r = fc_index(from);
            std::vector<std::string> row = {std::string(to_string(from))};
            for (TagLabel to : functional_labels())
              row.push_back(m.row_defined[std::size_t(r)]
                                ? format_fixed(m.probs(r, fc_index(to)), *decimals)
                                : std::string{});
            mcsv.row(row);
          }
          write_output(*matrix_out, plain);
        }
        if (!svg_out->empty())
          write_output(*svg_out, transitions_heatmap_svg(m, *decimals));
        return 0;
      };
    });
  });

  // ---- semantics ----
  auto* semantics_cmd = app.add_subcommand("semantics", "Centroid similarities and 2-D projection of embeddings");
  {
    auto emb = std::make_shared<std::string>();
    auto out_dir = std::make_shared<std::string>();
    auto decimals = std::make_shared<int>(2);
    semantics_cmd->add_option("--emb", *emb, "embedding JSONL file")->required();
    semantics_cmd->add_option("--out-dir", *out_dir, "output directory")->required();
    semantics_cmd->add_option("--decimals", *decimals, "similarity decimals (default 2)");
    semantics_cmd->callback([&action, emb, out_dir, decimals] {
      action = [emb, out_dir, decimals]() {
        RoundingConfig rounding;
        rounding.similarity = *decimals;
        const auto files = build_semantics_files(*emb, rounding);
        std::filesystem::create_directories(*out_dir);
        for (const auto& [name, bytes] : files)
          write_output((std::filesystem::path(*out_dir) / name).string(), bytes);
        return 0;
      };
    });
  }

  // ---- report ----
  auto* report_cmd = app.add_subcommand("report", "Emit the full analysis bundle for the configured corpora");
  {
    auto config_path = std::make_shared<std::string>();
    auto out_dir = std::make_shared<std::string>();
    report_cmd->add_option("--config", *config_path, "chunkorder.toml")->required();
    report_cmd->add_option("--out-dir", *out_dir, "override output_dir");
    report_cmd->callback([&action, config_path, out_dir] {
      action = [config_path, out_dir]() {
        PipelineConfig cfg = load_config(*config_path);
        if (!out_dir->empty()) cfg.output_dir = *out_dir;
        const ReportBundle bundle = run_report(cfg);
        std::cout << "wrote " << bundle.files.size() << " files to "
                  << bundle.dir.string() << "\n";
        return 0;
      };
    });
  }

  try {
    std::vector<const char*> argv;
    argv.push_back("chunkorder");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    return action ? action() : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace chunkorder
