#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace xmlclust {

// Minimal UTF-8 iteration. Invalid sequences decode byte-wise so that
// processing never fails on dirty input; results stay deterministic.
struct Utf8Char {
    char32_t cp;
    std::size_t width;  // bytes consumed
};

Utf8Char utf8_next(std::string_view s, std::size_t pos);

bool is_space_cp(char32_t cp);
bool is_word_cp(char32_t cp);  // letters and digits
bool is_apostrophe_cp(char32_t cp);
bool is_hyphen_cp(char32_t cp);

// Collapses runs of Unicode whitespace to a single ASCII space and trims.
std::string collapse_whitespace(std::string_view s);

// ASCII + Latin-1 lowercasing; other code points pass through.
std::string fold_case(std::string_view s);

}  // namespace xmlclust
