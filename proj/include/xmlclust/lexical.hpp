#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace xmlclust {

// Maximal runs of letters/digits; apostrophes and hyphens join a token
// only between two word characters, so "POPL'03" and "semi-structured"
// stay whole while trailing punctuation is cut off.
std::vector<std::string> tokenize(std::string_view text);

enum class PosClass { Noun, Verb, Adjective, Other };

PosClass pos_class_from_string(std::string_view name);
std::string_view to_string(PosClass c);

class PosClassSet {
  public:
    PosClassSet() = default;
    static PosClassSet parse(std::string_view csv);  // "noun,verb,adjective"
    static PosClassSet all_content();                // noun+verb+adjective

    void insert(PosClass c) { mask_ |= bit(c); }
    bool contains(PosClass c) const { return (mask_ & bit(c)) != 0; }
    bool empty() const { return mask_ == 0; }
    std::string to_string() const;

  private:
    static std::uint8_t bit(PosClass c) {
        return static_cast<std::uint8_t>(1u << static_cast<unsigned>(c));
    }
    std::uint8_t mask_ = 0;
};

struct TokenRecord {
    std::string surface;
    std::string pos;    // tag from the tagger's tagset
    std::string lemma;  // lowercased, never empty
};

// Coarse tag classes. Defaults follow the usual English tagsets: NN* are
// nouns, VV*/VB*/VH* verbs, JJ* adjectives; anything else is Other.
// Exact-tag overrides win over the prefix rules.
class TagClassMap {
  public:
    PosClass class_of(std::string_view tag) const;
    void set(std::string tag, PosClass c) { overrides_[std::move(tag)] = c; }

  private:
    std::map<std::string, PosClass, std::less<>> overrides_;
};

class Tagger {
  public:
    virtual ~Tagger() = default;
    // One record per token, same order.
    virtual std::vector<TokenRecord> tag(const std::vector<std::string>& tokens) = 0;
};

// Hermetic tagger: a built-in closed-class lexicon plus a seed of common
// research-prose verbs and adjectives, then suffix heuristics, default
// noun. Lemmas come from inflection stripping. Not a replacement for a
// real tagger, but deterministic and dependency-free.
class FallbackTagger : public Tagger {
  public:
    FallbackTagger();
    // `surface<TAB>POS<TAB>lemma` per line; extends/overrides the built-ins.
    void load_lexicon(const std::string& path);

    std::vector<TokenRecord> tag(const std::vector<std::string>& tokens) override;
    TokenRecord tag_one(const std::string& token) const;

  private:
    struct Entry {
        std::string pos;
        std::string lemma;
    };
    std::map<std::string, Entry, std::less<>> lexicon_;
};

// Adapter for a TreeTagger-style external process. Request: one token
// per line, UTF-8, LF. Response: `surface<TAB>POS<TAB>lemma`, same count
// and order, exactly two tabs per line.
class ExternalTagger : public Tagger {
  public:
    explicit ExternalTagger(std::string command) : command_(std::move(command)) {}
    std::vector<TokenRecord> tag(const std::vector<std::string>& tokens) override;

  private:
    std::string command_;
};

std::string encode_tokens(const std::vector<std::string>& tokens);
// Throws on a count mismatch or a malformed line.
std::vector<TokenRecord> decode_tagged(std::string_view response,
                                       std::size_t expected_count);

// Lemmas of the records whose tag class is in `keep`, order preserved.
std::vector<std::string> filter_pos(const std::vector<TokenRecord>& records,
                                    const PosClassSet& keep,
                                    const TagClassMap& tag_classes);

// Function-word lemmas of the built-in lexicon (determiners,
// prepositions, pronouns, auxiliaries, modals, adverbs, numerals), for
// the optional stopword filter.
const std::set<std::string>& builtin_stopword_lemmas();

}  // namespace xmlclust
