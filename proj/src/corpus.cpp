#include "xmlclust/corpus.hpp"

#include <expat.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "xmlclust/text.hpp"

namespace xmlclust {

namespace fs = std::filesystem;

const std::string* XmlNode::attribute(std::string_view attr_name) const {
    for (const auto& [key, value] : attributes) {
        if (key == attr_name) return &value;
    }
    return nullptr;
}

namespace {

void collect_text(const XmlNode& node, std::string& out) {
    if (node.is_text()) {
        out += node.text;
        out.push_back(' ');
        return;
    }
    for (const auto& child : node.children) collect_text(child, out);
}

}  // namespace

std::string XmlDoc::all_text() const {
    std::string raw;
    collect_text(root, raw);
    return collapse_whitespace(raw);
}

XmlParseError::XmlParseError(std::string file_, int line_, std::string reason_)
    : std::runtime_error(file_ + ":" + std::to_string(line_) + ": " + reason_),
      file(std::move(file_)),
      line(line_),
      reason(std::move(reason_)) {}

namespace {

struct ParserState {
    XmlNode root;
    std::vector<XmlNode*> stack;
    bool seen_root = false;
};

void XMLCALL on_start(void* user, const XML_Char* name, const XML_Char** atts) {
    auto* st = static_cast<ParserState*>(user);
    XmlNode node;
    node.name = name;
    for (const XML_Char** a = atts; *a != nullptr; a += 2) {
        node.attributes.emplace_back(a[0], a[1]);
    }
    if (st->stack.empty()) {
        st->root = std::move(node);
        st->stack.push_back(&st->root);
        st->seen_root = true;
    } else {
        auto& children = st->stack.back()->children;
        children.push_back(std::move(node));
        st->stack.push_back(&children.back());
    }
}

void XMLCALL on_end(void* user, const XML_Char*) {
    static_cast<ParserState*>(user)->stack.pop_back();
}

void XMLCALL on_chardata(void* user, const XML_Char* data, int len) {
    auto* st = static_cast<ParserState*>(user);
    if (st->stack.empty()) return;
    auto& children = st->stack.back()->children;
    if (!children.empty() && children.back().is_text()) {
        children.back().text.append(data, static_cast<std::size_t>(len));
    } else {
        XmlNode text_node;
        text_node.text.assign(data, static_cast<std::size_t>(len));
        children.push_back(std::move(text_node));
    }
}

// RAII around the expat C handle
class ExpatParser {
  public:
    ExpatParser() : parser_(XML_ParserCreate("UTF-8")) {
        if (parser_ == nullptr) throw std::runtime_error("XML_ParserCreate failed");
    }
    ~ExpatParser() { XML_ParserFree(parser_); }
    ExpatParser(const ExpatParser&) = delete;
    ExpatParser& operator=(const ExpatParser&) = delete;
    XML_Parser get() const { return parser_; }

  private:
    XML_Parser parser_;
};

XmlNode parse_tree(std::string_view xml, const std::string& error_file) {
    ExpatParser parser;
    ParserState state;
    XML_SetUserData(parser.get(), &state);
    XML_SetElementHandler(parser.get(), on_start, on_end);
    XML_SetCharacterDataHandler(parser.get(), on_chardata);

    const auto status = XML_Parse(parser.get(), xml.data(),
                                  static_cast<int>(xml.size()), /*isFinal=*/1);
    if (status == XML_STATUS_ERROR) {
        throw XmlParseError(
            error_file,
            static_cast<int>(XML_GetCurrentLineNumber(parser.get())),
            XML_ErrorString(XML_GetErrorCode(parser.get())));
    }
    if (!state.seen_root) {
        throw XmlParseError(error_file, 1, "no root element");
    }
    return std::move(state.root);
}

}  // namespace

XmlDoc parse_xml_string(std::string_view xml, std::string doc_id) {
    XmlDoc doc;
    doc.root = parse_tree(xml, doc_id);
    doc.doc_id = std::move(doc_id);
    return doc;
}

XmlDoc parse_xml_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw XmlParseError(path, 0, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string content = buf.str();

    XmlDoc doc;
    doc.root = parse_tree(content, path);
    doc.source_path = path;
    doc.doc_id = fs::path(path).stem().string();
    return doc;
}

CorpusLoad parse_corpus(const std::string& directory) {
    const fs::path dir(directory);
    if (!fs::is_directory(dir)) {
        throw std::runtime_error("corpus directory not found: " + directory);
    }

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".xml") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) {
                  return a.stem().string() < b.stem().string();
              });

    CorpusLoad load;
    for (const auto& file : files) {
        try {
            load.docs.push_back(parse_xml_file(file.string()));
        } catch (const XmlParseError& err) {
            load.issues.push_back({file.filename().string(), err.line, err.reason});
        }
    }
    return load;
}

}  // namespace xmlclust
