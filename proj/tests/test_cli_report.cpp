#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <set>

#include <json.hpp>

#include "chunkorder/cli.hpp"
#include "chunkorder/config.hpp"
#include "chunkorder/report.hpp"
#include "mock_endpoint.hpp"
#include "test_support.hpp"

using namespace chunkorder;
using testsupport::fixture_path;
using testsupport::TempDir;

namespace {

std::string write_tmp(const TempDir& dir, const std::string& name,
                      const std::string& content) {
  const auto path = dir.path / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path.string();
}

PipelineConfig fixture_config(const std::filesystem::path& out_dir) {
  PipelineConfig cfg = load_config(fixture_path("chunkorder.toml"));
  cfg.output_dir = out_dir;
  return cfg;
}

nlohmann::json manifest_without_timestamp(const std::filesystem::path& path) {
  auto j = testsupport::load_json(path);
  REQUIRE(j.contains("generated_at"));
  j.erase("generated_at");
  return j;
}

}  // namespace

TEST_CASE("no arguments is a usage error") {
  CHECK(cli_dispatch({}) == 1);
  CHECK(cli_dispatch({"unknown-subcommand"}) == 1);
  CHECK(cli_dispatch({"stats"}) == 1);  // missing required options
}

TEST_CASE("help exits cleanly") {
  CHECK(cli_dispatch({"--help"}) == 0);
  CHECK(cli_dispatch({"report", "--help"}) == 0);
}

TEST_CASE("validate: clean corpus passes, nested tags fail with a data exit") {
  CHECK(cli_dispatch({"validate", "--in", fixture_path("mini_en.txt").string()}) == 0);
  TempDir dir("cli");
  const auto bad =
      write_tmp(dir, "bad.txt", "<S>a</S>\n<time>x <place>y</place></time>\n");
  CHECK(cli_dispatch({"validate", "--in", bad}) == 2);
  CHECK(cli_dispatch({"validate", "--in", bad, "--mode", "lenient"}) == 2);
}

TEST_CASE("parse writes canonical lines") {
  TempDir dir("cli");
  const auto in = write_tmp(dir, "in.txt", "<TIME>now</TIME> <s>he</s> <V>ran</V>\n");
  const auto out = (dir.path / "out.txt").string();
  CHECK(cli_dispatch({"parse", "--in", in, "--out", out}) == 0);
  CHECK(testsupport::read_file(out) == "<time>now</time> <S>he</S> <V>ran</V>\n");
}

TEST_CASE("data errors exit 2, service errors exit 3") {
  CHECK(cli_dispatch({"stats", "--in", "/nonexistent.txt", "--language", "english"}) == 2);

  TempDir dir("cli");
  const auto raw = write_tmp(dir, "raw.txt", "one line\n");
  const auto out = (dir.path / "tagged.txt").string();
  // AuthMissing (no key in the environment) is a service-class failure
  const char* saved = std::getenv(kApiKeyEnv);
  std::string saved_value = saved ? saved : "";
  unsetenv(kApiKeyEnv);
  CHECK(cli_dispatch({"annotate", "--in", raw, "--out", out, "--config",
                      fixture_path("chunkorder.toml").string()}) == 3);
  if (saved) setenv(kApiKeyEnv, saved_value.c_str(), 1);
}

TEST_CASE("report aborts on an empty corpus without writing") {
  TempDir dir("cli");
  write_tmp(dir, "empty.txt", "");
  const auto config = write_tmp(dir, "cfg.toml",
                                "output_dir = \"bundle\"\n"
                                "[[corpora]]\n"
                                "name = \"empty\"\n"
                                "path = \"empty.txt\"\n"
                                "language = \"english\"\n");
  CHECK(cli_dispatch({"report", "--config", config}) == 2);
  CHECK_FALSE(std::filesystem::exists(dir.path / "bundle"));
}

TEST_CASE("report aborts on a strict parse failure") {
  TempDir dir("cli");
  write_tmp(dir, "bad.txt", "<S>ok</S>\n<foo>nope</foo>\n");
  const auto config = write_tmp(dir, "cfg.toml",
                                "output_dir = \"bundle\"\n"
                                "[[corpora]]\n"
                                "name = \"bad\"\n"
                                "path = \"bad.txt\"\n"
                                "language = \"english\"\n");
  CHECK(cli_dispatch({"report", "--config", config}) == 2);
  CHECK_FALSE(std::filesystem::exists(dir.path / "bundle"));
}

TEST_CASE("semantics subcommand writes the three outputs") {
  TempDir dir("cli");
  const auto out_dir = (dir.path / "sem").string();
  CHECK(cli_dispatch({"semantics", "--emb", fixture_path("emb_mini.jsonl").string(),
                      "--out-dir", out_dir}) == 0);
  for (const char* name : {"similarity.csv", "projection.csv", "projection.svg"})
    CHECK(std::filesystem::exists(std::filesystem::path(out_dir) / name));
  const std::string sim =
      testsupport::read_file(std::filesystem::path(out_dir) / "similarity.csv");
  CHECK(sim.find("subset_a,subset_b,cosine_pct") == 0);
  CHECK(sim.find("en,zh,") != std::string::npos);
}

TEST_CASE("annotate --dual writes tagged lines and an agreement report") {
  setenv(kApiKeyEnv, "cli-test-key", 1);
  testsupport::MockEndpoint mock;
  TempDir dir("annotate");
  const auto raw = write_tmp(dir, "raw.txt", "first target\nsecond target\n");
  const auto config = write_tmp(
      dir, "cfg.toml",
      "[annotation]\n"
      "endpoint_url = \"http://127.0.0.1:" + std::to_string(mock.port) +
          "/v1/chat/completions\"\n"
          "few_shot_path = \"" + fixture_path("few_shot.json").string() + "\"\n"
          "max_parallel = 2\n");
  const auto tagged = (dir.path / "tagged.txt").string();
  const auto report = (dir.path / "agreement.json").string();
  CHECK(cli_dispatch({"annotate", "--in", raw, "--out", tagged, "--config", config,
                      "--dual", "--agreement-out", report}) == 0);

  CHECK(testsupport::read_file(tagged) ==
        "<S>first target</S> <V>ok</V>\n<S>second target</S> <V>ok</V>\n");
  const auto agreement = testsupport::load_json(report);
  CHECK(agreement["n_sentences"] == 2);
  CHECK(agreement["exact_match_rate"] == 1.0);
  CHECK(agreement["chunk_f1"] == 1.0);
  unsetenv(kApiKeyEnv);
}

TEST_CASE("the report bundle matches the checked-in golden byte for byte") {
  TempDir dir("golden");
  const PipelineConfig cfg = fixture_config(dir.path / "bundle");
  const ReportBundle bundle = run_report(cfg);

  const auto golden_root = fixture_path("expected_bundle");
  REQUIRE(std::filesystem::exists(golden_root));

  std::set<std::string> golden_files;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(golden_root))
    if (entry.is_regular_file())
      golden_files.insert(
          std::filesystem::relative(entry.path(), golden_root).generic_string());
  const std::set<std::string> produced(bundle.files.begin(), bundle.files.end());
  CHECK(produced == golden_files);

  for (const std::string& rel : bundle.files) {
    if (rel == "manifest.json") {
      CHECK(manifest_without_timestamp(bundle.dir / rel) ==
            manifest_without_timestamp(golden_root / rel));
      continue;
    }
    INFO("file: ", rel);
    CHECK(testsupport::read_file(bundle.dir / rel) ==
          testsupport::read_file(golden_root / rel));
  }
}

TEST_CASE("rerunning the report reproduces every byte except the timestamp") {
  TempDir dir("rerun");
  const auto files_a = build_report_files(fixture_config(dir.path / "a"));
  const auto files_b = build_report_files(fixture_config(dir.path / "b"));
  REQUIRE(files_a.size() == files_b.size());
  for (const auto& [rel, bytes] : files_a) {
    if (rel == "manifest.json") {
      auto ja = nlohmann::json::parse(bytes);
      auto jb = nlohmann::json::parse(files_b.at(rel));
      ja.erase("generated_at");
      jb.erase("generated_at");
      CHECK(ja == jb);
      CHECK(ja["inputs"]["mini_en"]["sha256"] == jb["inputs"]["mini_en"]["sha256"]);
      continue;
    }
    CHECK(bytes == files_b.at(rel));
  }
}

TEST_CASE("every declared per-corpus table appears exactly once per corpus") {
  TempDir dir("decl");
  const auto files = build_report_files(fixture_config(dir.path / "x"));
  const std::vector<std::string> expected = {
      "stats.json",     "fc_distribution.csv",   "positions.csv",
      "tests.csv",      "condprob.csv",          "patterns.csv",
      "combos.csv",     "transitions.csv",       "transitions_matrix.csv",
      "transitions.svg"};
  for (const char* corpus : {"mini_en", "mini_zh"})
    for (const std::string& name : expected)
      CHECK(files.count(std::string(corpus) + "/" + name) == 1);
}
