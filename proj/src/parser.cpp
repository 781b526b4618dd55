#include "chunkorder/parser.hpp"

#include <fstream>
#include <optional>
#include <unordered_set>

#include "chunkorder/unicode.hpp"

namespace chunkorder {

namespace {

struct TagToken {
  bool closing = false;
  std::string_view name;  // label text between the brackets
  std::size_t begin = 0;  // offset of '<'
  std::size_t end = 0;    // offset one past '>'
};

// Lexes a tag token at raw[i] == '<': "<name>" or "</name>" with an
// all-letter name. Returns nullopt when the text is not tag-shaped.
std::optional<TagToken> lex_tag(std::string_view raw, std::size_t i) {
  TagToken tok;
  tok.begin = i;
  std::size_t p = i + 1;
  if (p < raw.size() && raw[p] == '/') {
    tok.closing = true;
    ++p;
  }
  const std::size_t name_start = p;
  while (p < raw.size() && ((raw[p] >= 'a' && raw[p] <= 'z') || (raw[p] >= 'A' && raw[p] <= 'Z')))
    ++p;
  if (p == name_start || p >= raw.size() || raw[p] != '>') return std::nullopt;
  tok.name = raw.substr(name_start, p - name_start);
  tok.end = p + 1;
  return tok;
}

std::string_view excerpt(std::string_view raw, std::size_t pos) {
  return raw.substr(pos, std::min<std::size_t>(24, raw.size() - pos));
}

}  // namespace

Sentence parse_sentence(std::string_view raw, ParseMode mode,
                        std::vector<Diagnostic>* diagnostics) {
  if (!validate_utf8(raw)) raise(Errc::encoding_error, "line is not valid UTF-8");

  Sentence s;
  s.raw.assign(raw);

  bool in_chunk = false;
  TagLabel open_label{};
  std::size_t content_start = 0;

  // Strict: throw. Lenient: record and keep the offending text literal.
  auto report = [&](Errc code, std::string msg) {
    if (mode == ParseMode::strict) raise(code, msg);
    if (diagnostics) diagnostics->push_back({0, code, std::move(msg)});
  };

  std::size_t i = 0;
  while (i < raw.size()) {
    if (raw[i] != '<') {
      ++i;
      continue;
    }
    const auto tok = lex_tag(raw, i);
    if (!tok) {
      ++i;
      continue;
    }
    const auto label = parse_label(tok->name);
    if (!label) {
      report(Errc::unknown_label,
             "unknown tag label <" + std::string(tok->name) + ">");
      i = tok->end;
      continue;
    }
    if (!tok->closing) {
      if (in_chunk)
        raise(Errc::nested_tag, "tag <" + std::string(tok->name) + "> opened inside <" +
                                    std::string(to_string(open_label)) + "> near \"" +
                                    std::string(excerpt(raw, tok->begin)) + "\"");
      in_chunk = true;
      open_label = *label;
      content_start = tok->end;
      i = tok->end;
      continue;
    }
    // closing tag
    if (!in_chunk) {
      report(Errc::stray_closing_tag,
             "closing tag </" + std::string(tok->name) + "> without an open span");
      i = tok->end;
      continue;
    }
    if (*label != open_label) {
      report(Errc::unclosed_tag,
             "<" + std::string(to_string(open_label)) + "> closed by </" +
                 std::string(tok->name) + ">");
      in_chunk = false;  // opener and content fall back to gap text
      i = tok->end;
      continue;
    }
    if (tok->begin == content_start) {
      report(Errc::empty_chunk,
             "<" + std::string(to_string(open_label)) + "> span is empty");
      in_chunk = false;
      i = tok->end;
      continue;
    }
    s.chunks.push_back({open_label,
                        std::string(raw.substr(content_start, tok->begin - content_start)),
                        content_start, tok->begin});
    in_chunk = false;
    i = tok->end;
  }
  if (in_chunk)
    report(Errc::unclosed_tag,
           "<" + std::string(to_string(open_label)) + "> never closed");

  check_sentence_invariants(s);
  return s;
}

std::string serialize_sentence(const Sentence& s) {
  std::string out;
  std::size_t pos = 0;
  for (const Chunk& c : s.chunks) {
    const auto name = to_string(c.label);
    const std::size_t markup_start = c.char_start - (name.size() + 2);
    out.append(s.raw, pos, markup_start - pos);
    out.append("<").append(name).append(">");
    out += c.text;
    out.append("</").append(name).append(">");
    pos = c.char_end + name.size() + 3;
  }
  out.append(s.raw, pos, s.raw.size() - pos);
  return out;
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_blank = false;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r') {
      pending_blank = !out.empty();
      continue;
    }
    if (pending_blank) out += ' ';
    pending_blank = false;
    out += c;
  }
  return out;
}

CorpusLoad parse_corpus(std::istream& in, Language language, ParseMode mode,
                        std::string name) {
  CorpusLoad load;
  load.corpus.language = language;
  load.corpus.name = name;

  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::string id;
    std::string_view raw = line;
    const auto tab = line.find('\t');
    if (tab != std::string::npos && tab > 0 &&
        line.find_first_of("<>", 0) > tab) {
      id = line.substr(0, tab);
      raw = std::string_view(line).substr(tab + 1);
    } else {
      id = name + "-L" + std::to_string(line_no);
    }

    const std::size_t before = load.diagnostics.size();
    try {
      Sentence s = parse_sentence(raw, mode, &load.diagnostics);
      for (std::size_t d = before; d < load.diagnostics.size(); ++d)
        load.diagnostics[d].line = line_no;
      if (!seen_ids.insert(id).second)
        raise(Errc::duplicate_id, "duplicate sentence id \"" + id + "\"");
      s.id = std::move(id);
      load.corpus.sentences.push_back(std::move(s));
    } catch (const Error& e) {
      if (mode == ParseMode::strict)
        raise(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
      for (std::size_t d = before; d < load.diagnostics.size(); ++d)
        load.diagnostics[d].line = line_no;
      load.diagnostics.push_back({line_no, e.code(), e.what()});
    }
  }
  if (in.bad()) raise(Errc::io_failure, "read failure after line " + std::to_string(line_no));
  return load;
}

CorpusLoad load_corpus_file(const std::filesystem::path& path, Language language,
                            ParseMode mode, std::string name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::io_failure, "cannot open " + path.string());
  if (name.empty()) name = path.stem().string();
  auto load = parse_corpus(in, language, mode, std::move(name));
  load.corpus.source_meta["path"] = path.string();
  load.corpus.source_meta["texts"] = "1";
  return load;
}

}  // namespace chunkorder
