#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xmlclust/selector.hpp"

namespace xmlclust {

// Canonical-name table for conference mentions. Variants are matched on a
// normalized key: case-folded, punctuation and whitespace removed, and a
// trailing 2- or 4-digit year stripped, so POPL'03 / POPL03 / POPL 2003
// all share the key "popl".
class AliasTable {
  public:
    // File format: `variant<TAB>canonical` per line, UTF-8; `#` starts a
    // comment, blank lines are ignored. Each canonical also maps its own
    // key to itself, which keeps normalization idempotent.
    static AliasTable load_file(const std::string& path);
    static AliasTable parse(std::istream& in, const std::string& origin);

    static std::string key_of(std::string_view variant);

    std::optional<std::string> lookup(std::string_view variant) const;
    void add(std::string_view variant, const std::string& canonical);
    std::size_t size() const { return entries_.size(); }

  private:
    std::map<std::string, std::string> entries_;  // key -> canonical
};

struct NormalizeResult {
    std::vector<TextFragment> fragments;
    std::size_t unknown = 0;  // fragments with no table entry, passed through
};

NormalizeResult normalize_conferences(std::vector<TextFragment> fragments,
                                      const AliasTable& table);

}  // namespace xmlclust
