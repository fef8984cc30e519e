#include "xmlclust/selector.hpp"

#include <cstdint>
#include <stdexcept>

#include "xmlclust/text.hpp"

namespace xmlclust {

namespace {

bool valid_name(std::string_view name) {
    if (name.empty()) return false;
    const auto first = static_cast<unsigned char>(name[0]);
    const bool first_ok = (first >= 'A' && first <= 'Z') ||
                          (first >= 'a' && first <= 'z') || first == '_' ||
                          first == ':' || first >= 0x80;
    if (!first_ok) return false;
    for (const char ch : name.substr(1)) {
        const auto c = static_cast<unsigned char>(ch);
        const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                        (c >= '0' && c <= '9') || c == '_' || c == ':' ||
                        c == '-' || c == '.' || c >= 0x80;
        if (!ok) return false;
    }
    return true;
}

}  // namespace

std::string Selector::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i].descendant) {
            if (i > 0) out += "//";
        } else {
            out += "/";
        }
        out += steps[i].name;
    }
    if (!attribute.empty()) {
        out += "@";
        out += attribute;
    }
    return out;
}

Selector parse_selector(std::string_view spec, std::string label) {
    Selector sel;

    std::string_view path = spec;
    const auto at = path.rfind('@');
    if (at != std::string_view::npos) {
        sel.attribute = std::string(path.substr(at + 1));
        path = path.substr(0, at);
        if (sel.attribute.empty() || !valid_name(sel.attribute)) {
            throw std::invalid_argument("bad attribute name in selector: " +
                                        std::string(spec));
        }
    }

    std::size_t pos = 0;
    bool first = true;
    while (pos < path.size()) {
        bool descendant = first;  // bare leading name searches everywhere
        if (path[pos] == '/') {
            descendant = false;
            ++pos;
            if (pos < path.size() && path[pos] == '/') {
                descendant = true;
                ++pos;
            }
        }
        const auto end = path.find('/', pos);
        const auto name = path.substr(pos, end == std::string_view::npos
                                               ? std::string_view::npos
                                               : end - pos);
        if (!valid_name(name)) {
            throw std::invalid_argument("bad element name in selector: " +
                                        std::string(spec));
        }
        sel.steps.push_back({std::string(name), descendant});
        pos = end == std::string_view::npos ? path.size() : end;
        first = false;
    }
    if (sel.steps.empty()) {
        throw std::invalid_argument("empty selector: " + std::string(spec));
    }
    if (sel.steps.size() > 63) {
        throw std::invalid_argument("selector too deep: " + std::string(spec));
    }

    sel.label = label.empty() ? std::string(spec) : std::move(label);
    return sel;
}

namespace {

void element_text(const XmlNode& node, std::string& out) {
    if (node.is_text()) {
        out += node.text;
        out.push_back(' ');
        return;
    }
    for (const auto& child : node.children) element_text(child, out);
}

// Pre-order walk with the usual path-automaton state set: bit s means
// "step s is to be matched next". Descendant states stay alive on every
// level below their context; child states only apply one level down.
// The walk order makes fragments come out in document order, and the
// bitmask dedupes states reached along different paths.
struct Matcher {
    const Selector& sel;
    const XmlDoc& doc;
    std::vector<TextFragment> out;

    void visit(const XmlNode& node, std::uint64_t states) {
        if (node.is_text()) return;

        std::uint64_t next = 0;
        bool matched_terminal = false;
        for (std::size_t s = 0; s < sel.steps.size(); ++s) {
            if ((states & (1ULL << s)) == 0) continue;
            if (node.name == sel.steps[s].name) {
                if (s + 1 == sel.steps.size()) {
                    matched_terminal = true;
                } else {
                    next |= 1ULL << (s + 1);
                }
            }
            if (sel.steps[s].descendant) next |= 1ULL << s;
        }

        if (matched_terminal) emit(node);
        for (const auto& child : node.children) visit(child, next);
    }

    void emit(const XmlNode& node) {
        std::string raw;
        if (sel.attribute.empty()) {
            element_text(node, raw);
        } else {
            const auto* value = node.attribute(sel.attribute);
            if (value == nullptr) return;
            raw = *value;
        }
        auto text = collapse_whitespace(raw);
        if (text.empty()) return;
        TextFragment frag;
        frag.doc_id = doc.doc_id;
        frag.selector_label = sel.label;
        frag.text = std::move(text);
        frag.ordinal = static_cast<int>(out.size());
        out.push_back(std::move(frag));
    }
};

}  // namespace

std::vector<TextFragment> select(const XmlDoc& doc, const Selector& selector) {
    Matcher m{selector, doc, {}};
    // The document node is the context of step 0, so the root element is
    // itself a candidate.
    m.visit(doc.root, 1);
    return std::move(m.out);
}

}  // namespace xmlclust
