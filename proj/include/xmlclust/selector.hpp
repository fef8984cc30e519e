#pragma once

#include <string>
#include <vector>

#include "xmlclust/corpus.hpp"

namespace xmlclust {

struct SelectorStep {
    std::string name;
    bool descendant = true;  // false: direct child of the previous context
};

// A small path language over element names:
//
//   presentation            any <presentation> in the document
//   /raweb/presentation     child steps from the document node
//   fondements//mot         <mot> anywhere under a <fondements>
//   citation@conf           value of the conf attribute of any <citation>
//
// A bare leading name searches the whole document; an explicit `/` pins
// the step to the level below its context. The document node is the
// context of the first step, so `/raweb` selects the root itself.
struct Selector {
    std::vector<SelectorStep> steps;
    std::string attribute;  // empty: element text target
    std::string label;

    std::string to_string() const;
};

// Throws std::invalid_argument on empty selectors or bad element names.
Selector parse_selector(std::string_view spec, std::string label = "");

struct TextFragment {
    std::string doc_id;
    std::string selector_label;
    std::string text;     // whitespace-normalized, non-empty
    int ordinal = 0;      // order of appearance within the document
};

// Fragments come back in document order with consecutive ordinals.
// Matches whose normalized text is empty are not emitted; an attribute
// target skips elements lacking the attribute.
std::vector<TextFragment> select(const XmlDoc& doc, const Selector& selector);

}  // namespace xmlclust
