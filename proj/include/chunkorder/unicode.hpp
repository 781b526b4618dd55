#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace chunkorder {

/// True when the byte sequence is well-formed UTF-8 (no overlong forms,
/// no surrogates, codepoints <= U+10FFFF).
bool validate_utf8(std::string_view bytes) noexcept;

/// Decodes the codepoint starting at byte offset `pos` and advances `pos`
/// past it. Input must already be validated.
char32_t decode_utf8(std::string_view bytes, std::size_t& pos) noexcept;

/// Whitespace and punctuation classes used by the tokenizers. Both tables
/// cover ASCII plus the general/CJK/fullwidth punctuation blocks; they are
/// deliberately explicit so the boundaries are part of the contract.
bool is_space_cp(char32_t cp) noexcept;
bool is_punct_cp(char32_t cp) noexcept;

/// ASCII-only case folding (types for English are counted case-folded).
std::string fold_ascii(std::string_view text);

}  // namespace chunkorder
