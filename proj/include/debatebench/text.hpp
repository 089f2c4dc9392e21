#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

namespace debatebench {

namespace detail {

/// Byte length of the UTF-8 sequence starting with `lead`, 1 for invalid leads.
inline std::size_t utf8_length(unsigned char lead) {
    if (lead < 0x80) return 1;
    if ((lead & 0xE0) == 0xC0) return 2;
    if ((lead & 0xF0) == 0xE0) return 3;
    if ((lead & 0xF8) == 0xF0) return 4;
    return 1;
}

inline std::uint32_t utf8_decode(std::string_view bytes) {
    std::uint32_t cp = 0;
    if (bytes.empty()) return 0;
    auto b = [&](std::size_t i) { return static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[i])); };
    switch (bytes.size()) {
        case 1: return b(0);
        case 2: return ((b(0) & 0x1F) << 6) | (b(1) & 0x3F);
        case 3: return ((b(0) & 0x0F) << 12) | ((b(1) & 0x3F) << 6) | (b(2) & 0x3F);
        case 4: return ((b(0) & 0x07) << 18) | ((b(1) & 0x3F) << 12) | ((b(2) & 0x3F) << 6) | (b(3) & 0x3F);
        default: return 0;
    }
    return cp;
}

/// Non-ASCII punctuation that separates tokens rather than joining them.
inline bool is_separator_codepoint(std::uint32_t cp) {
    switch (cp) {
        case 0x00A0:  // no-break space
        case 0x00B7:  // middle dot
        case 0x2013:  // en dash
        case 0x2014:  // em dash
        case 0x2018:  // left single quote
        case 0x2019:  // right single quote
        case 0x201C:  // left double quote
        case 0x201D:  // right double quote
        case 0x2022:  // bullet
        case 0x2026:  // ellipsis
            return true;
        default:
            return false;
    }
}

}  // namespace detail

/// Canonical text form shared by keyword parsing and solution matching:
/// lowercase, keep letters/digits/hyphens, every other character becomes a
/// space, runs of whitespace collapse to one space, leading/trailing space
/// trimmed. Idempotent: normalize_text(normalize_text(s)) == normalize_text(s).
inline std::string normalize_text(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;

    auto begin_token_char = [&]() {
        if (pending_space && !out.empty()) out.push_back(' ');
        pending_space = false;
    };

    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 0x80) {
            if (std::isalnum(c) != 0 || c == '-') {
                begin_token_char();
                out.push_back(static_cast<char>(std::tolower(c)));
            } else {
                pending_space = true;
            }
            ++i;
        } else {
            std::size_t len = detail::utf8_length(c);
            if (i + len > s.size()) len = 1;
            std::string_view seq = s.substr(i, len);
            if (detail::is_separator_codepoint(detail::utf8_decode(seq))) {
                pending_space = true;
            } else {
                // Non-ASCII word characters pass through unchanged.
                begin_token_char();
                out.append(seq);
            }
            i += len;
        }
    }
    return out;
}

}  // namespace debatebench
