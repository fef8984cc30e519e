#include "xmlclust/alias.hpp"

#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"

using namespace xmlclust;

TEST_SUITE("alias") {

TEST_CASE("key_of folds case, strips punctuation and trailing years") {
    CHECK(AliasTable::key_of("POPL'03") == "popl");
    CHECK(AliasTable::key_of("POPL 2003") == "popl");
    CHECK(AliasTable::key_of("popl03") == "popl");
    CHECK(AliasTable::key_of("ICNM-2003") == "icnm");
    CHECK(AliasTable::key_of("SAS") == "sas");
    CHECK(AliasTable::key_of("SIAM CSE") == "siamcse");
    // a single digit or an odd-length run is not a year
    CHECK(AliasTable::key_of("X3") == "x3");
    CHECK(AliasTable::key_of("AB12345") == "ab12345");
    // never strip the whole key
    CHECK(AliasTable::key_of("2003") == "2003");
    CHECK(AliasTable::key_of("C++") == "c");
}

TEST_CASE("add and lookup work through key normalization") {
    AliasTable table;
    table.add("POPL'03", "POPL");
    CHECK(table.lookup("POPL 2003") == "POPL");
    CHECK(table.lookup("popl98") == "POPL");
    CHECK_FALSE(table.lookup("ICFP'03").has_value());
    // same key, same canonical: fine
    CHECK_NOTHROW(table.add("POPL 1998", "POPL"));
    // same key, different canonical: conflict
    CHECK_THROWS_AS(table.add("POPL'99", "Principles"), std::runtime_error);
    CHECK_THROWS_AS(table.add("x", ""), std::runtime_error);
    CHECK_THROWS_AS(table.add("..!", "X"), std::runtime_error);
}

TEST_CASE("parse reads tab-separated lines and self-maps canonicals") {
    std::istringstream in(
        "# comment\n"
        "\n"
        "POPL'03\tPOPL\r\n"
        "SAS'03\tSAS\n");
    const auto table = AliasTable::parse(in, "aliases");
    CHECK(table.lookup("POPL 2003") == "POPL");
    CHECK(table.lookup("SAS03") == "SAS");
    // canonical names are fixed points
    CHECK(table.lookup("POPL") == "POPL");
    CHECK(table.lookup("SAS") == "SAS");
}

TEST_CASE("parse rejects malformed lines with position") {
    std::istringstream no_tab("POPL POPL\n");
    try {
        AliasTable::parse(no_tab, "aliases");
        FAIL("expected error");
    } catch (const std::runtime_error& err) {
        CHECK(std::string(err.what()).find("aliases:1") != std::string::npos);
    }
    std::istringstream two_tabs("a\tb\tc\n");
    CHECK_THROWS_AS(AliasTable::parse(two_tabs, "x"), std::runtime_error);
}

TEST_CASE("load_file reads the fixture table") {
    const auto table =
        AliasTable::load_file(testutil::fixture_path("aliases.tsv").string());
    CHECK(table.lookup("ICNM 2003") == "ICNM");
    CHECK(table.lookup("icnm'03") == "ICNM");
    CHECK(table.lookup("POPL03") == "POPL");
    CHECK_FALSE(table.lookup("ICSE 2003").has_value());
}

TEST_CASE("normalize_conferences rewrites matches and counts the rest") {
    AliasTable table;
    table.add("POPL'03", "POPL");
    table.add("SAS'03", "SAS");
    std::vector<TextFragment> frags(3);
    frags[0].text = "POPL 2003";
    frags[1].text = "SIAM CSE";
    frags[2].text = "sas'03";
    const auto result = normalize_conferences(std::move(frags), table);
    REQUIRE(result.fragments.size() == 3);
    CHECK(result.fragments[0].text == "POPL");
    CHECK(result.fragments[1].text == "SIAM CSE");
    CHECK(result.fragments[2].text == "SAS");
    CHECK(result.unknown == 1);
}

}  // TEST_SUITE
