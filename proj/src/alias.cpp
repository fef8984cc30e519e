#include "xmlclust/alias.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "xmlclust/text.hpp"

namespace xmlclust {

std::string AliasTable::key_of(std::string_view variant) {
    const std::string folded = fold_case(variant);
    std::string key;
    key.reserve(folded.size());
    std::size_t pos = 0;
    while (pos < folded.size()) {
        const auto [cp, width] = utf8_next(folded, pos);
        if (is_word_cp(cp)) key.append(folded.substr(pos, width));
        pos += width;
    }

    std::size_t digits = 0;
    while (digits < key.size() &&
           std::isdigit(static_cast<unsigned char>(key[key.size() - 1 - digits]))) {
        ++digits;
    }
    // only a 2- or 4-digit run reads as a year, and never the whole key
    if ((digits == 2 || digits == 4) && digits < key.size()) {
        key.resize(key.size() - digits);
    }
    return key;
}

void AliasTable::add(std::string_view variant, const std::string& canonical) {
    if (canonical.empty()) {
        throw std::runtime_error("alias table: empty canonical for variant '" +
                                 std::string(variant) + "'");
    }
    const std::string key = key_of(variant);
    if (key.empty()) {
        throw std::runtime_error("alias table: variant '" + std::string(variant) +
                                 "' normalizes to an empty key");
    }
    const auto [it, inserted] = entries_.emplace(key, canonical);
    if (!inserted && it->second != canonical) {
        throw std::runtime_error("alias table: key '" + key +
                                 "' maps to both '" + it->second + "' and '" +
                                 canonical + "'");
    }
}

std::optional<std::string> AliasTable::lookup(std::string_view variant) const {
    const auto it = entries_.find(key_of(variant));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

AliasTable AliasTable::parse(std::istream& in, const std::string& origin) {
    AliasTable table;
    std::string line;
    int line_no = 0;
    std::vector<std::string> canonicals;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
            throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                     ": expected `variant<TAB>canonical`");
        }
        const std::string variant = line.substr(0, tab);
        const std::string canonical = line.substr(tab + 1);
        table.add(variant, canonical);
        canonicals.push_back(canonical);
    }
    // self-mappings keep canonical names fixed points of normalization
    for (const auto& canonical : canonicals) table.add(canonical, canonical);
    return table;
}

AliasTable AliasTable::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open alias table: " + path);
    return parse(in, path);
}

NormalizeResult normalize_conferences(std::vector<TextFragment> fragments,
                                      const AliasTable& table) {
    NormalizeResult result;
    result.fragments = std::move(fragments);
    for (auto& frag : result.fragments) {
        if (auto canonical = table.lookup(frag.text)) {
            frag.text = std::move(*canonical);
        } else {
            ++result.unknown;
        }
    }
    return result;
}

}  // namespace xmlclust
