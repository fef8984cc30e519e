#include "xmlclust/text.hpp"

namespace xmlclust {

Utf8Char utf8_next(std::string_view s, std::size_t pos) {
    const auto b0 = static_cast<unsigned char>(s[pos]);
    if (b0 < 0x80) return {b0, 1};

    std::size_t len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        return {b0, 1};  // stray continuation byte
    }
    if (pos + len > s.size()) return {b0, 1};
    for (std::size_t i = 1; i < len; ++i) {
        const auto b = static_cast<unsigned char>(s[pos + i]);
        if ((b & 0xC0) != 0x80) return {b0, 1};
        cp = (cp << 6) | (b & 0x3F);
    }
    return {cp, len};
}

bool is_space_cp(char32_t cp) {
    switch (cp) {
        case U' ': case U'\t': case U'\n': case U'\v': case U'\f': case U'\r':
        case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
        case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

bool is_word_cp(char32_t cp) {
    if (cp < 0x80) {
        return (cp >= U'0' && cp <= U'9') || (cp >= U'A' && cp <= U'Z') ||
               (cp >= U'a' && cp <= U'z');
    }
    if (cp == 0xD7 || cp == 0xF7) return false;
    if (cp >= 0xC0 && cp <= 0x24F) return true;   // Latin-1 / Latin Extended
    if (cp >= 0x370 && cp <= 0x1FFF) return true; // Greek, Cyrillic, ...
    if (cp >= 0x3040 && cp <= 0xD7FF) return true; // CJK
    if (cp >= 0xF900 && cp <= 0xFDCF) return true;
    return false;
}

bool is_apostrophe_cp(char32_t cp) { return cp == U'\'' || cp == 0x2019; }

bool is_hyphen_cp(char32_t cp) {
    return cp == U'-' || cp == 0x2010 || cp == 0x2011;
}

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const auto [cp, width] = utf8_next(s, pos);
        if (is_space_cp(cp)) {
            pending_space = !out.empty();
        } else {
            if (pending_space) {
                out.push_back(' ');
                pending_space = false;
            }
            out.append(s.substr(pos, width));
        }
        pos += width;
    }
    return out;
}

std::string fold_case(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t pos = 0;
    while (pos < s.size()) {
        const auto [cp, width] = utf8_next(s, pos);
        if (cp >= U'A' && cp <= U'Z') {
            out.push_back(static_cast<char>(cp + 32));
        } else if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) {
            // Latin-1 uppercase letters; lowercase forms stay two bytes
            const char32_t low = cp + 32;
            out.push_back(static_cast<char>(0xC0 | (low >> 6)));
            out.push_back(static_cast<char>(0x80 | (low & 0x3F)));
        } else {
            out.append(s.substr(pos, width));
        }
        pos += width;
    }
    return out;
}

}  // namespace xmlclust
