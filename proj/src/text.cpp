// Copyright 2026 course-semparse authors
// SPDX-License-Identifier: Apache-2.0

#include "semparse/text.hpp"

#include "semparse/errors.hpp"

namespace semparse {

namespace {

[[noreturn]] void bad_utf8(std::size_t offset) {
    throw Error(ErrorKind::invalid_encoding,
                "invalid UTF-8 at byte offset " + std::to_string(offset));
}

} // namespace

std::vector<CodePoint> decode_utf8(std::string_view text) {
    std::vector<CodePoint> out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        const auto b0 = static_cast<unsigned char>(text[i]);
        char32_t cp = 0;
        std::size_t len = 0;
        if (b0 < 0x80) {
            cp = b0;
            len = 1;
        } else if ((b0 & 0xE0) == 0xC0) {
            cp = b0 & 0x1F;
            len = 2;
        } else if ((b0 & 0xF0) == 0xE0) {
            cp = b0 & 0x0F;
            len = 3;
        } else if ((b0 & 0xF8) == 0xF0) {
            cp = b0 & 0x07;
            len = 4;
        } else {
            bad_utf8(i);
        }
        if (i + len > text.size())
            bad_utf8(i);
        for (std::size_t k = 1; k < len; ++k) {
            const auto b = static_cast<unsigned char>(text[i + k]);
            if ((b & 0xC0) != 0x80)
                bad_utf8(i);
            cp = (cp << 6) | (b & 0x3F);
        }
        // overlong encodings, surrogates, out of range
        if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
            (len == 4 && cp < 0x10000) || (cp >= 0xD800 && cp <= 0xDFFF) ||
            cp > 0x10FFFF)
            bad_utf8(i);
        out.push_back({cp, i});
        i += len;
    }
    return out;
}

void append_utf8(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

char32_t fold_case(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z')
        return cp + 0x20;
    if (cp < 0x80)
        return cp;
    // Latin-1 Supplement (excluding the multiplication sign)
    if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7)
        return cp + 0x20;
    // Latin Extended-A: mostly upper/lower pairs on even/odd code points
    if (cp >= 0x0100 && cp <= 0x0137)
        return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp >= 0x0139 && cp <= 0x0148)
        return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x014A && cp <= 0x0177)
        return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp == 0x0178)
        return 0x00FF;
    if (cp >= 0x0179 && cp <= 0x017E)
        return (cp % 2 == 1) ? cp + 1 : cp;
    // Greek
    if (cp == 0x0386)
        return 0x03AC;
    if (cp >= 0x0388 && cp <= 0x038A)
        return cp + 0x25;
    if (cp == 0x038C)
        return 0x03CC;
    if (cp == 0x038E || cp == 0x038F)
        return cp + 0x3F;
    if (cp >= 0x0391 && cp <= 0x03AB && cp != 0x03A2)
        return cp + 0x20;
    // Cyrillic
    if (cp >= 0x0400 && cp <= 0x040F)
        return cp + 0x50;
    if (cp >= 0x0410 && cp <= 0x042F)
        return cp + 0x20;
    if (cp >= 0x0460 && cp <= 0x0481)
        return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp >= 0x048A && cp <= 0x04BF)
        return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp == 0x04C0)
        return 0x04CF;
    if (cp >= 0x04C1 && cp <= 0x04CD)
        return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x04D0 && cp <= 0x052F)
        return (cp % 2 == 0) ? cp + 1 : cp;
    return cp;
}

bool is_letter(char32_t cp) {
    if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z'))
        return true;
    if (cp < 0x80)
        return false;
    if (cp >= 0x00C0 && cp <= 0x00FF)
        return cp != 0x00D7 && cp != 0x00F7;
    if (cp >= 0x0100 && cp <= 0x024F) // Latin Extended-A/B
        return true;
    if (cp >= 0x0386 && cp <= 0x03FF) // Greek
        return cp != 0x0387;
    if (cp >= 0x0400 && cp <= 0x0481) // Cyrillic
        return true;
    if (cp >= 0x048A && cp <= 0x052F) // Cyrillic incl. Ukrainian ghe with upturn
        return true;
    return false;
}

bool is_ascii_digit(char32_t cp) {
    return cp >= U'0' && cp <= U'9';
}

bool is_apostrophe(char32_t cp) {
    return cp == 0x0027 || cp == 0x2019 || cp == 0x02BC;
}

bool is_hyphen(char32_t cp) {
    return cp == 0x002D || cp == 0x2010 || cp == 0x2011;
}

std::string fold_utf8(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (const auto& c : decode_utf8(text))
        append_utf8(fold_case(c.value), out);
    return out;
}

} // namespace semparse
