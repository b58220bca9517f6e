// Copyright 2026 course-semparse authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace semparse {

/// One decoded code point with its byte offset in the source string.
struct CodePoint {
    char32_t value;
    std::size_t byte_offset;
};

/// Strict UTF-8 decode. Throws Error(invalid_encoding) on malformed input
/// (truncated sequences, overlongs, surrogates, out-of-range).
std::vector<CodePoint> decode_utf8(std::string_view text);

void append_utf8(char32_t cp, std::string& out);

/// Locale-independent case folding for the scripts this tool targets
/// (Basic Latin, Latin-1/Extended-A, Greek, Cyrillic). Identity elsewhere.
char32_t fold_case(char32_t cp);

bool is_letter(char32_t cp);
bool is_ascii_digit(char32_t cp);
bool is_apostrophe(char32_t cp);
bool is_hyphen(char32_t cp);

/// Token characters: letters, digits, apostrophes, hyphens.
inline bool is_word_char(char32_t cp) {
    return is_letter(cp) || is_ascii_digit(cp) || is_apostrophe(cp) || is_hyphen(cp);
}

inline bool is_space(char32_t cp) {
    return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\f' ||
           cp == U'\v';
}

inline bool is_sentence_terminator(char32_t cp) {
    return cp == U'.' || cp == U'!' || cp == U'?';
}

/// Case-folds a whole UTF-8 string (used for dictionary entries).
std::string fold_utf8(std::string_view text);

} // namespace semparse
