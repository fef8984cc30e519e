#include "xmlclust/lexical.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"

using namespace xmlclust;

namespace {

std::vector<std::string> toks(std::initializer_list<const char*> list) {
    return {list.begin(), list.end()};
}

}  // namespace

TEST_SUITE("lexical") {

TEST_CASE("tokenize splits on non-word characters") {
    CHECK(tokenize("We study, clustering.") ==
          toks({"We", "study", "clustering"}));
    CHECK(tokenize("") == toks({}));
    CHECK(tokenize("...") == toks({}));
    CHECK(tokenize("2003 raweb") == toks({"2003", "raweb"}));
}

TEST_CASE("tokenize keeps inner apostrophes and hyphens") {
    CHECK(tokenize("don't stop") == toks({"don't", "stop"}));
    CHECK(tokenize("l'analyse") == toks({"l'analyse"}));
    CHECK(tokenize("state-of-the-art") == toks({"state-of-the-art"}));
    // the joiner needs word characters on both sides
    CHECK(tokenize("well- known") == toks({"well", "known"}));
    CHECK(tokenize("'tis") == toks({"tis"}));
    CHECK(tokenize("rock 'n' roll") == toks({"rock", "n", "roll"}));
    CHECK(tokenize("re-") == toks({"re"}));
    // right single quotation mark joins like the ASCII apostrophe
    CHECK(tokenize("don\xE2\x80\x99t") == toks({"don\xE2\x80\x99t"}));
}

TEST_CASE("tokenize passes non-ASCII words through") {
    CHECK(tokenize("\xC3\xA9" "cole d\xC3\xA9j\xC3\xA0") ==
          toks({"\xC3\xA9" "cole", "d\xC3\xA9j\xC3\xA0"}));
}

TEST_CASE("PosClassSet parses comma lists") {
    const auto set = PosClassSet::parse("noun, verb");
    CHECK(set.contains(PosClass::Noun));
    CHECK(set.contains(PosClass::Verb));
    CHECK_FALSE(set.contains(PosClass::Adjective));
    CHECK(set.to_string() == "noun,verb");

    CHECK(PosClassSet::parse("").empty());
    CHECK_THROWS_AS(PosClassSet::parse("bogus"), std::invalid_argument);

    const auto all = PosClassSet::all_content();
    CHECK(all.contains(PosClass::Noun));
    CHECK(all.contains(PosClass::Verb));
    CHECK(all.contains(PosClass::Adjective));
    CHECK_FALSE(all.contains(PosClass::Other));
}

TEST_CASE("TagClassMap maps tag prefixes with overrides on top") {
    TagClassMap map;
    CHECK(map.class_of("NN") == PosClass::Noun);
    CHECK(map.class_of("NNS") == PosClass::Noun);
    CHECK(map.class_of("VV") == PosClass::Verb);
    CHECK(map.class_of("VVZ") == PosClass::Verb);
    CHECK(map.class_of("VBP") == PosClass::Verb);
    CHECK(map.class_of("VHZ") == PosClass::Verb);
    CHECK(map.class_of("JJ") == PosClass::Adjective);
    CHECK(map.class_of("JJR") == PosClass::Adjective);
    CHECK(map.class_of("NP") == PosClass::Other);
    CHECK(map.class_of("RB") == PosClass::Other);
    CHECK(map.class_of("SENT") == PosClass::Other);
    map.set("NP", PosClass::Noun);
    CHECK(map.class_of("NP") == PosClass::Noun);
}

TEST_CASE("fallback tagger: closed class and digits") {
    FallbackTagger tagger;
    auto rec = tagger.tag_one("The");
    CHECK(rec.surface == "The");
    CHECK(rec.pos == "DT");
    CHECK(rec.lemma == "the");

    rec = tagger.tag_one("2003");
    CHECK(rec.pos == "CD");
    CHECK(rec.lemma == "2003");

    CHECK(tagger.tag_one("is").pos == "VBZ");
    CHECK(tagger.tag_one("is").lemma == "be");
    CHECK(tagger.tag_one("are").lemma == "be");
}

TEST_CASE("fallback tagger: inflections resolved through the lexicon") {
    FallbackTagger tagger;
    const struct {
        const char* token;
        const char* pos;
        const char* lemma;
    } cases[] = {
        {"converges", "VVZ", "converge"},  {"computes", "VVZ", "compute"},
        {"studies", "VVZ", "study"},       {"studied", "VVD", "study"},
        {"estimates", "VVZ", "estimate"},  {"exploits", "VVZ", "exploit"},
        {"derived", "VVD", "derive"},      {"examined", "VVD", "examine"},
    };
    for (const auto& c : cases) {
        const auto rec = tagger.tag_one(c.token);
        CHECK_MESSAGE(rec.pos == c.pos, c.token);
        CHECK_MESSAGE(rec.lemma == c.lemma, c.token);
    }
}

TEST_CASE("fallback tagger: suffix heuristics") {
    FallbackTagger tagger;
    const struct {
        const char* token;
        const char* pos;
        const char* lemma;
    } cases[] = {
        {"computation", "NN", "computation"},
        {"computations", "NNS", "computation"},
        {"semantics", "NN", "semantics"},
        {"stability", "NN", "stability"},
        {"towers", "NNS", "tower"},
        {"cluster", "NN", "cluster"},
        {"optimizes", "VVZ", "optimize"},
        {"verifies", "VVZ", "verify"},
        {"iterative", "JJ", "iterative"},
        {"numerical", "JJ", "numerical"},
        {"static", "JJ", "static"},
        {"famous", "JJ", "famous"},
    };
    for (const auto& c : cases) {
        const auto rec = tagger.tag_one(c.token);
        CHECK_MESSAGE(rec.pos == c.pos, c.token);
        CHECK_MESSAGE(rec.lemma == c.lemma, c.token);
    }
}

TEST_CASE("fallback tagger: default noun with plural stripping") {
    FallbackTagger tagger;
    const struct {
        const char* token;
        const char* pos;
        const char* lemma;
    } cases[] = {
        {"algorithms", "NNS", "algorithm"},
        {"languages", "NNS", "language"},
        {"works", "NNS", "work"},
        {"clustering", "NN", "clustering"},
        {"processing", "NN", "processing"},
        {"analysis", "NN", "analysis"},   // -is is not a plural
        {"class", "NN", "class"},         // -ss is not a plural
        {"corpus", "NN", "corpus"},       // -us is not a plural
        {"t0w00", "NN", "t0w00"},
    };
    for (const auto& c : cases) {
        const auto rec = tagger.tag_one(c.token);
        CHECK_MESSAGE(rec.pos == c.pos, c.token);
        CHECK_MESSAGE(rec.lemma == c.lemma, c.token);
    }
}

TEST_CASE("fallback tagger: user lexicon extends and overrides") {
    testutil::TempDir dir;
    const auto path = dir.path() / "extra.tsv";
    testutil::write_file(path, "testy\tJJ\ttesty\nthe\tXX\tthe\n");
    FallbackTagger tagger;
    CHECK(tagger.tag_one("testy").pos == "NN");  // default before loading
    tagger.load_lexicon(path.string());
    CHECK(tagger.tag_one("testy").pos == "JJ");
    CHECK(tagger.tag_one("the").pos == "XX");
    CHECK_THROWS_AS(tagger.load_lexicon((dir.path() / "missing.tsv").string()),
                    std::runtime_error);
}

TEST_CASE("fallback tagger tags token runs in order") {
    FallbackTagger tagger;
    const auto records = tagger.tag(tokenize("We study the clustering"));
    REQUIRE(records.size() == 4);
    CHECK(records[0].pos == "PP");
    CHECK(records[1].pos == "VV");
    CHECK(records[2].pos == "DT");
    CHECK(records[3].pos == "NN");
}

TEST_CASE("filter_pos keeps lemmas of the wanted classes in order") {
    FallbackTagger tagger;
    TagClassMap classes;
    const auto records =
        tagger.tag(tokenize("We study the clustering of numerical corpora"));

    PosClassSet nouns;
    nouns.insert(PosClass::Noun);
    CHECK(filter_pos(records, nouns, classes) ==
          toks({"clustering", "corpora"}));

    PosClassSet verbs;
    verbs.insert(PosClass::Verb);
    CHECK(filter_pos(records, verbs, classes) == toks({"study"}));

    PosClassSet adj;
    adj.insert(PosClass::Adjective);
    CHECK(filter_pos(records, adj, classes) == toks({"numerical"}));

    PosClassSet nv;
    nv.insert(PosClass::Noun);
    nv.insert(PosClass::Verb);
    CHECK(filter_pos(records, nv, classes) ==
          toks({"study", "clustering", "corpora"}));
}

TEST_CASE("builtin stopword lemmas cover function words only") {
    const auto& stop = builtin_stopword_lemmas();
    CHECK(stop.count("the") == 1);
    CHECK(stop.count("of") == 1);
    CHECK(stop.count("we") == 1);
    CHECK(stop.count("be") == 1);
    CHECK(stop.count("have") == 1);
    CHECK(stop.count("do") == 1);
    CHECK(stop.count("study") == 0);
    CHECK(stop.count("cluster") == 0);
    CHECK(stop.count("numerical") == 0);
}

TEST_CASE("encode_tokens writes one token per line") {
    CHECK(encode_tokens({"a", "b"}) == "a\nb\n");
    CHECK(encode_tokens({}) == "");
    CHECK_THROWS_AS(encode_tokens({"bad\ntoken"}), std::runtime_error);
    CHECK_THROWS_AS(encode_tokens({"bad\ttoken"}), std::runtime_error);
}

TEST_CASE("decode_tagged parses well-formed responses only") {
    const auto records = decode_tagged("A\tNN\ta\nB\tVV\tb\n", 2);
    REQUIRE(records.size() == 2);
    CHECK(records[0].surface == "A");
    CHECK(records[0].pos == "NN");
    CHECK(records[0].lemma == "a");
    CHECK(records[1].surface == "B");

    CHECK_THROWS_AS(decode_tagged("A\tNN\ta\n", 2), std::runtime_error);
    CHECK_THROWS_AS(decode_tagged("A\tNN\n", 1), std::runtime_error);
    CHECK_THROWS_AS(decode_tagged("A\tNN\ta\tz\n", 1), std::runtime_error);
    // lemma kept verbatim at this level; the tagger post-processes it
    CHECK(decode_tagged("A\tNN\t<unknown>\n", 1)[0].lemma == "<unknown>");
}

TEST_CASE("external tagger round-trips through a child process") {
    ExternalTagger tagger(XMLCLUST_MOCK_TAGGER);
    const auto records = tagger.tag({"Alpha", "beta"});
    REQUIRE(records.size() == 2);
    CHECK(records[0].surface == "Alpha");
    CHECK(records[0].pos == "NN");
    CHECK(records[0].lemma == "alpha");  // lemmas come back case-folded
    CHECK(records[1].surface == "beta");
    CHECK(records[1].lemma == "beta");

    CHECK(tagger.tag({}).empty());
}

TEST_CASE("external tagger failure carries the child's diagnostics") {
    ExternalTagger tagger(std::string(XMLCLUST_MOCK_TAGGER) + " --fail");
    try {
        tagger.tag({"alpha"});
        FAIL("expected error");
    } catch (const std::runtime_error& err) {
        const std::string what = err.what();
        CHECK(what.find("external tagger failed") != std::string::npos);
        CHECK(what.find("mock tagger failing on request") != std::string::npos);
    }
}

TEST_CASE("external tagger rejects a record count mismatch") {
    ExternalTagger tagger(std::string(XMLCLUST_MOCK_TAGGER) + " --drop-last");
    CHECK_THROWS_AS(tagger.tag({"alpha", "beta"}), std::runtime_error);
}

TEST_CASE("external tagger rejects tokens it cannot transport") {
    ExternalTagger tagger(XMLCLUST_MOCK_TAGGER);
    CHECK_THROWS_AS(tagger.tag({"bad\ntoken"}), std::runtime_error);
}

}  // TEST_SUITE
