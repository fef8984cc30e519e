#include "xmlclust/lexical.hpp"

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <csignal>
#include <cstring>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "xmlclust/text.hpp"

namespace xmlclust {

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    const std::size_t n = text.size();
    while (pos < n) {
        const auto [cp, width] = utf8_next(text, pos);
        if (!is_word_cp(cp)) {
            pos += width;
            continue;
        }
        const std::size_t start = pos;
        std::size_t end = pos + width;
        while (end < n) {
            const auto [c2, w2] = utf8_next(text, end);
            if (is_word_cp(c2)) {
                end += w2;
                continue;
            }
            if (is_apostrophe_cp(c2) || is_hyphen_cp(c2)) {
                // joins only between two word characters
                const std::size_t after = end + w2;
                if (after < n) {
                    const auto [c3, w3] = utf8_next(text, after);
                    if (is_word_cp(c3)) {
                        end = after + w3;
                        continue;
                    }
                }
            }
            break;
        }
        tokens.emplace_back(text.substr(start, end - start));
        pos = end;
    }
    return tokens;
}

PosClass pos_class_from_string(std::string_view name) {
    if (name == "noun") return PosClass::Noun;
    if (name == "verb") return PosClass::Verb;
    if (name == "adjective") return PosClass::Adjective;
    if (name == "other") return PosClass::Other;
    throw std::invalid_argument("unknown POS class: " + std::string(name));
}

std::string_view to_string(PosClass c) {
    switch (c) {
        case PosClass::Noun: return "noun";
        case PosClass::Verb: return "verb";
        case PosClass::Adjective: return "adjective";
        default: return "other";
    }
}

PosClassSet PosClassSet::parse(std::string_view csv) {
    PosClassSet set;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        auto end = csv.find(',', pos);
        if (end == std::string_view::npos) end = csv.size();
        auto item = csv.substr(pos, end - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (!item.empty()) set.insert(pos_class_from_string(item));
        pos = end + 1;
    }
    return set;
}

PosClassSet PosClassSet::all_content() {
    PosClassSet set;
    set.insert(PosClass::Noun);
    set.insert(PosClass::Verb);
    set.insert(PosClass::Adjective);
    return set;
}

std::string PosClassSet::to_string() const {
    std::string out;
    for (const auto c : {PosClass::Noun, PosClass::Verb, PosClass::Adjective,
                         PosClass::Other}) {
        if (!contains(c)) continue;
        if (!out.empty()) out += ",";
        out += xmlclust::to_string(c);
    }
    return out;
}

PosClass TagClassMap::class_of(std::string_view tag) const {
    if (const auto it = overrides_.find(tag); it != overrides_.end()) {
        return it->second;
    }
    if (tag.starts_with("NN")) return PosClass::Noun;
    if (tag.starts_with("VV") || tag.starts_with("VB") || tag.starts_with("VH")) {
        return PosClass::Verb;
    }
    if (tag.starts_with("JJ")) return PosClass::Adjective;
    return PosClass::Other;
}

// ---------------------------------------------------------------------------
// fallback tagger

namespace lexicon_detail {
struct LexiconEntry {
    const char* surface;
    const char* pos;
    const char* lemma;
};
extern const LexiconEntry kBuiltinLexicon[];
extern const std::size_t kBuiltinLexiconSize;
}  // namespace lexicon_detail

FallbackTagger::FallbackTagger() {
    using lexicon_detail::kBuiltinLexicon;
    using lexicon_detail::kBuiltinLexiconSize;
    for (std::size_t i = 0; i < kBuiltinLexiconSize; ++i) {
        const auto& e = kBuiltinLexicon[i];
        lexicon_[e.surface] = {e.pos, e.lemma};
    }
}

void FallbackTagger::load_lexicon(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open lexicon: " + path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto t1 = line.find('\t');
        const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
        if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected `surface<TAB>POS<TAB>lemma`");
        }
        const std::string surface = fold_case(line.substr(0, t1));
        lexicon_[surface] = {line.substr(t1 + 1, t2 - t1 - 1),
                            fold_case(line.substr(t2 + 1))};
    }
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (const char ch : s) {
        if (ch < '0' || ch > '9') return false;
    }
    return true;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool verbish(std::string_view pos) {
    return pos.starts_with("VV") || pos.starts_with("VB") || pos.starts_with("VH");
}

}  // namespace

TokenRecord FallbackTagger::tag_one(const std::string& token) const {
    const std::string s = fold_case(token);
    if (all_digits(s)) return {token, "CD", s};

    if (const auto it = lexicon_.find(s); it != lexicon_.end()) {
        return {token, it->second.pos, it->second.lemma};
    }

    // inflected form of a lexicon word?
    struct Inflection {
        const char* suffix;
        const char* replacements[2];
        const char* verb_tag;
        const char* noun_tag;
    };
    static constexpr Inflection kInflections[] = {
        {"ies", {"y", nullptr}, "VVZ", "NNS"},
        {"es", {"", "e"}, "VVZ", "NNS"},
        {"s", {"", nullptr}, "VVZ", "NNS"},
        {"ied", {"y", nullptr}, "VVD", nullptr},
        {"ed", {"", "e"}, "VVD", nullptr},
        {"ing", {"", "e"}, "VVG", nullptr},
    };
    for (const auto& rule : kInflections) {
        if (!ends_with(s, rule.suffix) || s.size() <= std::strlen(rule.suffix)) {
            continue;
        }
        for (const char* repl : rule.replacements) {
            if (repl == nullptr) break;
            const std::string stem =
                s.substr(0, s.size() - std::strlen(rule.suffix)) + repl;
            const auto it = lexicon_.find(stem);
            if (it == lexicon_.end()) continue;
            if (verbish(it->second.pos)) {
                return {token, rule.verb_tag, it->second.lemma};
            }
            if (rule.noun_tag != nullptr && it->second.pos.starts_with("NN")) {
                return {token, rule.noun_tag, it->second.lemma};
            }
        }
    }

    // suffix heuristics; plural noun endings first so that "ics" is not
    // read as adjective "ic" + s
    static constexpr const char* kNounPlural[] = {"tions", "ments", "ities",
                                                  "isms"};
    for (const char* suf : kNounPlural) {
        if (ends_with(s, suf) && s.size() > std::strlen(suf)) {
            return {token, "NNS", s.substr(0, s.size() - 1)};
        }
    }
    static constexpr const char* kNoun[] = {"tion", "ment", "ity", "ism", "ics"};
    for (const char* suf : kNoun) {
        if (ends_with(s, suf) && s.size() > std::strlen(suf)) {
            return {token, "NN", s};
        }
    }
    if (ends_with(s, "ers") && s.size() > 4) return {token, "NNS", s.substr(0, s.size() - 1)};
    if (ends_with(s, "er") && s.size() > 3) return {token, "NN", s};

    struct VerbSuffix {
        const char* suffix;
        const char* tag;
        const char* lemma_suffix;
    };
    static constexpr VerbSuffix kVerb[] = {
        {"izes", "VVZ", "ize"}, {"ized", "VVD", "ize"}, {"izing", "VVG", "ize"},
        {"ize", "VV", "ize"},   {"ates", "VVZ", "ate"}, {"ated", "VVD", "ate"},
        {"ating", "VVG", "ate"}, {"ate", "VV", "ate"},  {"ifies", "VVZ", "ify"},
        {"ified", "VVD", "ify"}, {"ifying", "VVG", "ify"}, {"ify", "VV", "ify"},
    };
    for (const auto& rule : kVerb) {
        if (ends_with(s, rule.suffix) && s.size() > std::strlen(rule.suffix)) {
            return {token, rule.tag,
                    s.substr(0, s.size() - std::strlen(rule.suffix)) +
                        rule.lemma_suffix};
        }
    }

    static constexpr const char* kAdjective[] = {"ous", "ive", "al", "ic"};
    for (const char* suf : kAdjective) {
        if (ends_with(s, suf) && s.size() > std::strlen(suf) + 1) {
            return {token, "JJ", s};
        }
    }

    // default: noun, with a plain plural guess
    if (ends_with(s, "s") && s.size() > 3 && !ends_with(s, "ss") &&
        !ends_with(s, "us") && !ends_with(s, "is")) {
        return {token, "NNS", s.substr(0, s.size() - 1)};
    }
    return {token, "NN", s};
}

std::vector<TokenRecord> FallbackTagger::tag(const std::vector<std::string>& tokens) {
    std::vector<TokenRecord> records;
    records.reserve(tokens.size());
    for (const auto& token : tokens) records.push_back(tag_one(token));
    return records;
}

// ---------------------------------------------------------------------------
// interchange format

std::string encode_tokens(const std::vector<std::string>& tokens) {
    std::string out;
    for (const auto& token : tokens) {
        if (token.find('\n') != std::string::npos ||
            token.find('\t') != std::string::npos) {
            throw std::runtime_error("token contains control characters: " + token);
        }
        out += token;
        out += '\n';
    }
    return out;
}

std::vector<TokenRecord> decode_tagged(std::string_view response,
                                       std::size_t expected_count) {
    std::vector<TokenRecord> records;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos < response.size()) {
        auto end = response.find('\n', pos);
        if (end == std::string_view::npos) end = response.size();
        const auto line = response.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        const auto t1 = line.find('\t');
        const auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
        if (t2 == std::string_view::npos ||
            line.find('\t', t2 + 1) != std::string_view::npos) {
            throw std::runtime_error("tagger line " + std::to_string(line_no) +
                                     " is not `surface<TAB>POS<TAB>lemma`: " +
                                     std::string(line));
        }
        records.push_back({std::string(line.substr(0, t1)),
                           std::string(line.substr(t1 + 1, t2 - t1 - 1)),
                           std::string(line.substr(t2 + 1))});
    }
    if (records.size() != expected_count) {
        throw std::runtime_error("tagger returned " +
                                 std::to_string(records.size()) +
                                 " records for " + std::to_string(expected_count) +
                                 " tokens");
    }
    return records;
}

// ---------------------------------------------------------------------------
// external process adapter

namespace {

struct Pipe {
    int fds[2] = {-1, -1};
    Pipe() {
        if (pipe(fds) != 0) throw std::runtime_error("pipe() failed");
    }
    ~Pipe() {
        close_read();
        close_write();
    }
    void close_read() {
        if (fds[0] >= 0) ::close(fds[0]);
        fds[0] = -1;
    }
    void close_write() {
        if (fds[1] >= 0) ::close(fds[1]);
        fds[1] = -1;
    }
};

std::string drain_fd(int fd) {
    std::string out;
    std::array<char, 4096> buf;
    for (;;) {
        const ssize_t n = read(fd, buf.data(), buf.size());
        if (n <= 0) break;
        out.append(buf.data(), static_cast<std::size_t>(n));
    }
    return out;
}

void write_all(int fd, std::string_view data) {
    std::size_t off = 0;
    while (off < data.size()) {
        const ssize_t n = write(fd, data.data() + off, data.size() - off);
        if (n < 0) {
            if (errno == EINTR) continue;
            return;  // broken pipe: the exit status will tell the story
        }
        off += static_cast<std::size_t>(n);
    }
}

}  // namespace

std::vector<TokenRecord> ExternalTagger::tag(const std::vector<std::string>& tokens) {
    if (tokens.empty()) return {};

    // a dead tagger must surface as an error, not kill the process
    static std::once_flag sigpipe_once;
    std::call_once(sigpipe_once, [] { std::signal(SIGPIPE, SIG_IGN); });

    const std::string request = encode_tokens(tokens);

    Pipe to_child, from_child, err_child;
    const pid_t pid = fork();
    if (pid < 0) throw std::runtime_error("fork() failed");
    if (pid == 0) {
        dup2(to_child.fds[0], STDIN_FILENO);
        dup2(from_child.fds[1], STDOUT_FILENO);
        dup2(err_child.fds[1], STDERR_FILENO);
        to_child.close_read();
        to_child.close_write();
        from_child.close_read();
        from_child.close_write();
        err_child.close_read();
        err_child.close_write();
        execl("/bin/sh", "sh", "-c", command_.c_str(), nullptr);
        _exit(127);
    }

    to_child.close_read();
    from_child.close_write();
    err_child.close_write();

    std::thread writer([&] {
        write_all(to_child.fds[1], request);
        to_child.close_write();
    });
    std::string diagnostics;
    std::thread err_reader([&] { diagnostics = drain_fd(err_child.fds[0]); });

    const std::string response = drain_fd(from_child.fds[0]);
    writer.join();
    err_reader.join();

    int status = 0;
    waitpid(pid, &status, 0);
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
        throw std::runtime_error("external tagger failed (" + command_ +
                                 "): " + diagnostics);
    }

    auto records = decode_tagged(response, tokens.size());
    for (auto& rec : records) {
        if (rec.lemma.empty() || rec.lemma == "<unknown>") {
            rec.lemma = fold_case(rec.surface);
        } else {
            rec.lemma = fold_case(rec.lemma);
        }
    }
    return records;
}

std::vector<std::string> filter_pos(const std::vector<TokenRecord>& records,
                                    const PosClassSet& keep,
                                    const TagClassMap& tag_classes) {
    std::vector<std::string> lemmas;
    for (const auto& rec : records) {
        if (keep.contains(tag_classes.class_of(rec.pos))) {
            lemmas.push_back(fold_case(rec.lemma));
        }
    }
    return lemmas;
}

const std::set<std::string>& builtin_stopword_lemmas() {
    static const std::set<std::string> words = [] {
        std::set<std::string> out;
        using lexicon_detail::kBuiltinLexicon;
        using lexicon_detail::kBuiltinLexiconSize;
        for (std::size_t i = 0; i < kBuiltinLexiconSize; ++i) {
            const std::string_view pos = kBuiltinLexicon[i].pos;
            if (pos.starts_with("NN") || pos.starts_with("VV") ||
                pos.starts_with("JJ")) {
                continue;  // content entries are not stopwords
            }
            out.insert(kBuiltinLexicon[i].lemma);
        }
        // auxiliaries whose tags look like content tags
        out.insert("be");
        out.insert("have");
        out.insert("do");
        return out;
    }();
    return words;
}

}  // namespace xmlclust
