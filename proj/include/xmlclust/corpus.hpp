#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xmlclust {

// One node of a parsed element tree. Text nodes have an empty name and
// carry their content in `text`; element nodes keep children in document
// order, with adjacent character data merged into a single text node.
struct XmlNode {
    std::string name;
    std::string text;
    std::vector<std::pair<std::string, std::string>> attributes;
    std::vector<XmlNode> children;

    bool is_text() const { return name.empty(); }
    const std::string* attribute(std::string_view attr_name) const;
};

struct XmlDoc {
    std::string doc_id;       // file stem, unique per corpus
    std::string source_path;
    XmlNode root;

    // Whole-document text content, whitespace-normalized.
    std::string all_text() const;
};

class XmlParseError : public std::runtime_error {
  public:
    XmlParseError(std::string file, int line, std::string reason);
    const std::string file;
    const int line;
    const std::string reason;
};

struct ParseIssue {
    std::string file;
    int line = 0;
    std::string reason;
};

struct CorpusLoad {
    std::vector<XmlDoc> docs;        // ordered by doc_id
    std::vector<ParseIssue> issues;  // one per file that failed to parse
};

XmlDoc parse_xml_string(std::string_view xml, std::string doc_id);
XmlDoc parse_xml_file(const std::string& path);

// Loads every *.xml file in `directory` (non-recursive). Files that fail
// to parse are reported in `issues`; the rest of the corpus still loads.
// A missing or unreadable directory throws.
CorpusLoad parse_corpus(const std::string& directory);

}  // namespace xmlclust
