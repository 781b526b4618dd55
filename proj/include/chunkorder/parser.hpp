#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "chunkorder/corpus.hpp"

namespace chunkorder {

/// Parses one annotated line into a Sentence (id left empty).
///
/// The tag grammar is flat: `<label>text</label>` spans separated by
/// untagged gaps. Tag names are matched case-insensitively against the
/// closed vocabulary; a `<` that does not open a well-formed tag token is
/// literal text.
///
/// Strict mode throws on any malformed construct. Lenient mode downgrades
/// unknown labels, stray closers, unclosed opens and empty spans to
/// diagnostics (appended to `diagnostics` when given), keeping the offending
/// markup as literal gap text. Nesting is a hard error in both modes.
Sentence parse_sentence(std::string_view raw, ParseMode mode,
                        std::vector<Diagnostic>* diagnostics = nullptr);

/// Inverse of parse_sentence: emits gaps and `<label>text</label>` spans in
/// surface order with canonical label spelling.
std::string serialize_sentence(const Sentence& s);

/// Collapses runs of ASCII blanks to one space and trims both ends; used
/// for round-trip comparisons.
std::string normalize_whitespace(std::string_view text);

struct CorpusLoad {
  Corpus corpus;
  std::vector<Diagnostic> diagnostics;
};

/// Reads one annotated sentence per line. Ids come from a leading
/// `id<TAB>` field when present (the prefix must be nonempty and free of
/// angle brackets), otherwise `<name>-L<line>`. In strict mode the first
/// rejected line aborts the load; in lenient mode rejected lines become
/// diagnostics and parsing continues.
CorpusLoad parse_corpus(std::istream& in, Language language, ParseMode mode,
                        std::string name);

/// parse_corpus over a file; name defaults to the file stem.
CorpusLoad load_corpus_file(const std::filesystem::path& path, Language language,
                            ParseMode mode, std::string name = "");

}  // namespace chunkorder
