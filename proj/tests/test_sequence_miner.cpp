#include <doctest.h>

#include <random>

#include "chunkorder/sequence_miner.hpp"
#include "test_support.hpp"

using namespace chunkorder;
using testsupport::fixture_path;

TEST_CASE("tag sequence follows surface order, gaps ignored") {
  const auto s = parse_sentence(
      "<S>The agency</S> <V>announced</V> <O>new penalties</O> "
      "<time>on Friday night</time> <cause>for the breach of the accord</cause>",
      ParseMode::strict);
  const TagSequence seq = tag_sequence(s);
  CHECK(seq.labels == std::vector<TagLabel>{TagLabel::S, TagLabel::V, TagLabel::O,
                                            TagLabel::time, TagLabel::cause});
  CHECK(pattern_to_string(seq.labels) == "<S><V><O><time><cause>");
}

TEST_CASE("zero-chunk sentence yields an empty sequence") {
  const auto s = parse_sentence("plain text only", ParseMode::strict);
  CHECK(tag_sequence(s).labels.empty());
}

TEST_CASE("pattern counting aggregates identical sequences") {
  const auto corpus = testsupport::corpus_from_text(
      "<S>a</S> <V>b</V> <effect>c</effect>\n<S>d</S> <V>e</V> <effect>f</effect>\n",
      Language::english, ParseMode::strict);
  const PatternTable table = pattern_counts(corpus);
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0].frequency == 2);
  CHECK(pattern_to_string(table.rows[0].pattern) == "<S><V><effect>");
  CHECK(table.total == 2);
}

TEST_CASE("chunkless sentences do not contribute patterns") {
  const auto corpus = testsupport::corpus_from_text(
      "<S>a</S> <V>b</V>\nplain\n\n", Language::english, ParseMode::strict);
  CHECK(corpus.sentences.size() == 3);
  const PatternTable table = pattern_counts(corpus);
  CHECK(table.total == 1);
}

TEST_CASE("combination projection keeps order and repeats") {
  const auto corpus = testsupport::corpus_from_text(
      "<place>p1</place> <S>s</S> <manner>m1</manner> <V>v</V> <O>o</O> "
      "<place>p2</place> <manner>m2</manner>\n",
      Language::english, ParseMode::strict);
  const PatternTable table = fc_combination_counts(corpus);
  REQUIRE(table.rows.size() == 1);
  CHECK(pattern_to_string(table.rows[0].pattern) == "<place><manner><place><manner>");
}

TEST_CASE("min_len filters short projections") {
  const auto corpus = testsupport::corpus_from_text(
      "<time>t</time> <S>s</S> <V>v</V>\n<time>t</time> <place>p</place> <V>v</V>\n",
      Language::english, ParseMode::strict);
  const PatternTable table = fc_combination_counts(corpus, 2);
  CHECK(table.total == 1);
  REQUIRE(table.rows.size() == 1);
  CHECK(pattern_to_string(table.rows[0].pattern) == "<time><place>");
}

TEST_CASE("ranking breaks frequency ties by pattern string") {
  const auto corpus = testsupport::corpus_from_text(
      "<time>a</time> <place>b</place>\n<place>c</place> <time>d</time>\n",
      Language::english, ParseMode::strict);
  const PatternTable table = fc_combination_counts(corpus);
  REQUIRE(table.rows.size() == 2);
  CHECK(pattern_to_string(table.rows[0].pattern) == "<place><time>");
  CHECK(pattern_to_string(table.rows[1].pattern) == "<time><place>");
}

TEST_CASE("top_k truncation keeps the table prefix") {
  const auto corpus = testsupport::load_fixture_corpus("mini_en.txt", Language::english);
  const PatternTable full = pattern_counts(corpus);
  const PatternTable limited = pattern_counts(corpus, 5);
  REQUIRE(limited.rows.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(limited.rows[i].pattern == full.rows[i].pattern);
    CHECK(limited.rows[i].frequency == full.rows[i].frequency);
  }
  CHECK(limited.total == full.total);
}

TEST_CASE("single projected sentence drives the transition rows") {
  const auto corpus = testsupport::corpus_from_text(
      "<time>a</time> <S>x</S> <place>b</place> <V>y</V> <time>c</time>\n",
      Language::english, ParseMode::strict);
  const TransitionMatrix m = transition_matrix(corpus);
  CHECK(m.counts(fc_index(TagLabel::time), fc_index(TagLabel::place)) == 1);
  CHECK(m.counts(fc_index(TagLabel::place), fc_index(TagLabel::time)) == 1);
  CHECK(m.probs(fc_index(TagLabel::time), fc_index(TagLabel::place)) == 1.0);
  CHECK(m.probs(fc_index(TagLabel::place), fc_index(TagLabel::time)) == 1.0);
  CHECK(m.row_defined[std::size_t(fc_index(TagLabel::time))]);
  CHECK(m.row_defined[std::size_t(fc_index(TagLabel::place))]);
  for (TagLabel l : {TagLabel::manner, TagLabel::cause, TagLabel::effect,
                     TagLabel::condition, TagLabel::purpose, TagLabel::concession}) {
    CHECK_FALSE(m.row_defined[std::size_t(fc_index(l))]);
    CHECK(m.counts.row(fc_index(l)).sum() == 0);
  }
}

TEST_CASE("anchors are transparent to transitions, sentence breaks reset the chain") {
  const auto corpus = testsupport::corpus_from_text(
      "<time>a</time> <V>v</V> <place>b</place>\n<manner>m</manner>\n<cause>c</cause>\n",
      Language::english, ParseMode::strict);
  const TransitionMatrix m = transition_matrix(corpus);
  CHECK(m.counts(fc_index(TagLabel::time), fc_index(TagLabel::place)) == 1);
  CHECK(m.counts.sum() == 1);  // no cross-sentence manner->cause pair
}

TEST_CASE("defined rows are stochastic, undefined rows are all zero") {
  const auto corpus = testsupport::load_fixture_corpus("mini_zh.txt", Language::chinese);
  const TransitionMatrix m = transition_matrix(corpus);
  for (int r = 0; r < kFcCount; ++r) {
    if (m.row_defined[std::size_t(r)]) {
      CHECK(std::fabs(m.probs.row(r).sum() - 1.0) <= 1e-12);
    } else {
      CHECK(m.probs.row(r).cwiseAbs().sum() == 0.0);
      CHECK(m.counts.row(r).sum() == 0);
    }
  }
}

TEST_CASE("property: transition counts add over corpus concatenation") {
  std::mt19937 rng(211);
  std::uniform_int_distribution<int> n_sent(0, 8);
  std::uniform_int_distribution<int> n_chunks(0, 7);
  std::uniform_int_distribution<int> label_pick(0, kLabelCount - 1);
  auto random_corpus = [&](const std::string& prefix) {
    Corpus c;
    const int ns = n_sent(rng);
    for (int si = 0; si < ns; ++si) {
      std::vector<SentencePart> parts;
      const int n = n_chunks(rng);
      for (int i = 0; i < n; ++i)
        parts.push_back({static_cast<TagLabel>(label_pick(rng)), "x"});
      c.sentences.push_back(sentence_from_parts(prefix + std::to_string(si), parts));
    }
    return c;
  };
  for (int iter = 0; iter < 1000; ++iter) {
    const Corpus a = random_corpus("a");
    const Corpus b = random_corpus("b");
    Corpus both = a;
    for (const Sentence& s : b.sentences) both.sentences.push_back(s);
    const TransitionMatrix ma = transition_matrix(a);
    const TransitionMatrix mb = transition_matrix(b);
    const TransitionMatrix mc = transition_matrix(both);
    CHECK((mc.counts - (ma.counts + mb.counts)).cwiseAbs().sum() == 0);
  }
}

TEST_CASE("property: pattern frequencies sum to the sentence count with chunks") {
  for (const char* file : {"mini_en.txt", "mini_zh.txt"}) {
    const auto corpus = testsupport::load_fixture_corpus(
        file, std::string(file) == "mini_en.txt" ? Language::english
                                                 : Language::chinese);
    const PatternTable table = pattern_counts(corpus);
    std::uint64_t sum = 0;
    for (const PatternRow& row : table.rows) sum += row.frequency;
    std::uint64_t with_chunks = 0;
    for (const Sentence& s : corpus.sentences)
      if (!s.chunks.empty()) ++with_chunks;
    CHECK(sum == with_chunks);
    CHECK(table.total == with_chunks);

    const PatternTable combos = fc_combination_counts(corpus, 2);
    CHECK(combos.total <= corpus.sentences.size());
  }
}

TEST_CASE("fixture tables equal the recorded tallies") {
  struct Case {
    const char* file;
    const char* expected;
    Language lang;
  };
  for (const Case& tc : {Case{"mini_en.txt", "mini_en.expected.json", Language::english},
                         Case{"mini_zh.txt", "mini_zh.expected.json", Language::chinese}}) {
    const auto corpus = testsupport::load_fixture_corpus(tc.file, tc.lang);
    const auto expected = testsupport::load_json(fixture_path(tc.expected));

    const PatternTable patterns = pattern_counts(corpus);
    REQUIRE(patterns.rows.size() == expected["patterns"].size());
    for (std::size_t i = 0; i < patterns.rows.size(); ++i) {
      CHECK(pattern_to_string(patterns.rows[i].pattern) ==
            expected["patterns"][i][0].get<std::string>());
      CHECK(patterns.rows[i].frequency == expected["patterns"][i][1].get<std::uint64_t>());
    }

    const PatternTable combos = fc_combination_counts(corpus, 2);
    REQUIRE(combos.rows.size() == expected["combos"].size());
    for (std::size_t i = 0; i < combos.rows.size(); ++i) {
      CHECK(pattern_to_string(combos.rows[i].pattern) ==
            expected["combos"][i][0].get<std::string>());
      CHECK(combos.rows[i].frequency == expected["combos"][i][1].get<std::uint64_t>());
    }

    const TransitionMatrix m = transition_matrix(corpus);
    const auto& counts = expected["transitions"]["counts"];
    for (int r = 0; r < kFcCount; ++r)
      for (int col = 0; col < kFcCount; ++col)
        CHECK(m.counts(r, col) == counts[std::size_t(r)][std::size_t(col)].get<std::int64_t>());

    // cross-check row sums by a brute re-scan of adjacent FC pairs
    for (int r = 0; r < kFcCount; ++r) {
      std::int64_t expected_row = 0;
      for (const Sentence& s : corpus.sentences) {
        std::vector<TagLabel> fc;
        for (const Chunk& ch : s.chunks)
          if (is_functional(ch.label)) fc.push_back(ch.label);
        for (std::size_t i = 1; i < fc.size(); ++i)
          if (fc_index(fc[i - 1]) == r) ++expected_row;
      }
      CHECK(m.counts.row(r).sum() == expected_row);
    }
  }
}
