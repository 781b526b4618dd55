#include "chunkorder/annotator.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "chunkorder/parser.hpp"

namespace chunkorder {

FewShotSet load_few_shot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::io_failure, "cannot open " + path.string());
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    raise(Errc::schema_error, path.string() + ": not a JSON object");

  FewShotSet fs;
  fs.instruction = doc.value("instruction", std::string{});
  if (fs.instruction.empty())
    raise(Errc::schema_error, path.string() + ": missing instruction");

  if (!doc.contains("examples") || !doc["examples"].is_array())
    raise(Errc::schema_error, path.string() + ": missing examples array");
  for (const auto& pair : doc["examples"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      raise(Errc::schema_error, path.string() + ": examples must be [raw, annotated] pairs");
    const auto annotated = pair[1].get<std::string>();
    parse_sentence(annotated, ParseMode::strict);  // must be well-formed
    fs.examples.emplace_back(pair[0].get<std::string>(), annotated);
  }
  if (fs.examples.size() < 3)
    raise(Errc::schema_error, path.string() + ": at least three examples required");

  if (doc.contains("per_label_examples")) {
    for (const auto& [key, value] : doc["per_label_examples"].items()) {
      if (!parse_label(key))
        raise(Errc::schema_error, path.string() + ": unknown label \"" + key + "\"");
      fs.per_label_examples[std::string(to_string(*parse_label(key)))] =
          value.get<std::string>();
    }
  }
  return fs;
}

std::string build_prompt(std::string_view raw, const FewShotSet& fs) {
  if (fs.examples.empty()) raise(Errc::empty_few_shot, "few-shot set has no examples");

  std::string prompt;
  prompt += fs.instruction;
  prompt += "\n";
  if (!fs.per_label_examples.empty()) {
    prompt += "\nLabels:\n";
    for (TagLabel label : all_labels()) {
      const auto it = fs.per_label_examples.find(std::string(to_string(label)));
      if (it == fs.per_label_examples.end()) continue;
      prompt += "<";
      prompt += to_string(label);
      prompt += ">: ";
      prompt += it->second;
      prompt += "\n";
    }
  }
  prompt += "\nExamples:\n";
  for (const auto& [example_raw, annotated] : fs.examples) {
    prompt += "Input: " + example_raw + "\n";
    prompt += "Output: " + annotated + "\n\n";
  }
  prompt += "Input: ";
  prompt += raw;
  prompt += "\nOutput:";
  return prompt;
}

namespace {

struct Endpoint {
  std::string base;  // scheme://host[:port]
  std::string path;  // /v1/...
};

Endpoint split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos)
    raise(Errc::config_error, "endpoint_url must include a scheme: " + url);
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

std::string api_key_or_throw() {
  const char* key = std::getenv(kApiKeyEnv);
  if (!key || !*key)
    raise(Errc::auth_missing, std::string(kApiKeyEnv) + " is not set");
  return key;
}

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\n' || s.front() == '\r' ||
                        s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\n' || s.back() == '\r' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Sentence annotate_sentence(std::string_view raw, const AnnotationConfig& cfg,
                           const FewShotSet& fs) {
  const std::string key = api_key_or_throw();
  const Endpoint ep = split_url(cfg.endpoint_url);

  httplib::Client client(ep.base);
  client.set_connection_timeout(std::chrono::milliseconds(int64_t(cfg.timeout_s * 1000)));
  client.set_read_timeout(std::chrono::milliseconds(int64_t(cfg.timeout_s * 1000)));
  client.set_write_timeout(std::chrono::milliseconds(int64_t(cfg.timeout_s * 1000)));

  nlohmann::json messages = nlohmann::json::array();
  messages.push_back({{"role", "user"}, {"content", build_prompt(raw, fs)}});

  std::string last_error;
  bool last_was_parse_failure = false;

  const int attempts = cfg.retry_limit + 1;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    nlohmann::json body = {{"model", cfg.model_name},
                           {"messages", messages},
                           {"temperature", cfg.temperature}};
    httplib::Headers headers = {{"Authorization", "Bearer " + key}};
    auto res = client.Post(ep.path, headers, body.dump(), "application/json");

    if (!res) {
      last_error = "transport error: " + httplib::to_string(res.error());
      last_was_parse_failure = false;
      continue;
    }
    if (res->status != 200) {
      last_error = "HTTP " + std::to_string(res->status);
      last_was_parse_failure = false;
      continue;
    }
    nlohmann::json reply = nlohmann::json::parse(res->body, nullptr, false);
    if (reply.is_discarded() || !reply.contains("choices") || reply["choices"].empty() ||
        !reply["choices"][0].contains("message") ||
        !reply["choices"][0]["message"].contains("content") ||
        !reply["choices"][0]["message"]["content"].is_string()) {
      last_error = "response body is not a chat completion";
      last_was_parse_failure = false;
      continue;
    }
    const std::string content =
        std::string(trim_view(reply["choices"][0]["message"]["content"].get<std::string>()));
    try {
      return parse_sentence(content, ParseMode::strict);
    } catch (const Error& e) {
      last_error = e.what();
      last_was_parse_failure = true;
      messages.push_back({{"role", "assistant"}, {"content", content}});
      messages.push_back(
          {{"role", "user"},
           {"content", std::string("The annotation could not be parsed (") + e.what() +
                           "). Return only the corrected annotated sentence."}});
    }
  }

  if (last_was_parse_failure)
    raise(Errc::malformed_annotation,
          "no parseable annotation after " + std::to_string(attempts) + " attempts: " +
              last_error);
  raise(Errc::service_error,
        "request failed after " + std::to_string(attempts) + " attempts: " + last_error);
}

AnnotationRun annotate_corpus(const std::vector<std::string>& raw_lines,
                              const AnnotationConfig& cfg, const FewShotSet& fs,
                              Language language, std::string name) {
  api_key_or_throw();  // abort before spawning workers

  const std::size_t n = raw_lines.size();
  std::vector<std::optional<Sentence>> results(n);
  std::vector<std::optional<AnnotationFailure>> failures(n);

  std::atomic<std::size_t> next{0};
  const int workers = std::max(1, std::min<int>(cfg.max_parallel, int(n)));
  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        results[i] = annotate_sentence(raw_lines[i], cfg, fs);
      } catch (const Error& e) {
        failures[i] = AnnotationFailure{i + 1, e.code(), e.what()};
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(std::size_t(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();

  AnnotationRun run;
  run.corpus.language = language;
  run.corpus.name = name;
  for (std::size_t i = 0; i < n; ++i) {
    if (results[i]) {
      results[i]->id = name + "-L" + std::to_string(i + 1);
      run.corpus.sentences.push_back(std::move(*results[i]));
    } else if (failures[i]) {
      run.failures.push_back(std::move(*failures[i]));
    }
  }
  return run;
}

namespace {

std::vector<std::pair<TagLabel, std::string>> chunk_items(const Sentence& s) {
  std::vector<std::pair<TagLabel, std::string>> items;
  items.reserve(s.chunks.size());
  for (const Chunk& c : s.chunks) items.emplace_back(c.label, c.text);
  return items;
}

}  // namespace

AgreementReport agreement(const Corpus& run_a, const Corpus& run_b) {
  if (run_a.sentences.size() != run_b.sentences.size())
    raise(Errc::id_mismatch, "runs have different sentence counts");

  std::map<std::string, const Sentence*> by_id;
  for (const Sentence& s : run_b.sentences) by_id[s.id] = &s;

  AgreementReport report;
  report.n_sentences = run_a.sentences.size();

  std::size_t exact = 0;
  std::uint64_t tp = 0, total_a = 0, total_b = 0;
  std::map<TagLabel, std::array<std::uint64_t, 3>> per_label;  // tp, |a|, |b|

  for (const Sentence& a : run_a.sentences) {
    const auto it = by_id.find(a.id);
    if (it == by_id.end())
      raise(Errc::id_mismatch, "sentence id \"" + a.id + "\" missing from second run");
    const Sentence& b = *it->second;

    const auto items_a = chunk_items(a);
    const auto items_b = chunk_items(b);
    if (items_a == items_b) ++exact;

    std::map<std::pair<TagLabel, std::string>, std::int64_t> balance;
    for (const auto& item : items_a) ++balance[item];
    for (const auto& item : items_b) {
      auto& slot = balance[item];
      if (slot > 0) {
        ++tp;
        ++per_label[item.first][0];
      }
      --slot;
    }
    total_a += items_a.size();
    total_b += items_b.size();
    for (const auto& item : items_a) ++per_label[item.first][1];
    for (const auto& item : items_b) ++per_label[item.first][2];
  }

  report.exact_match_rate =
      report.n_sentences ? double(exact) / double(report.n_sentences) : 1.0;
  report.chunk_f1 =
      (total_a + total_b) ? 2.0 * double(tp) / double(total_a + total_b) : 1.0;
  for (const auto& [label, counts] : per_label)
    report.per_label_f1[label] = 2.0 * double(counts[0]) / double(counts[1] + counts[2]);
  return report;
}

}  // namespace chunkorder
