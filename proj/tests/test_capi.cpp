#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "palper.h"

namespace {

struct Out {
    char* s = nullptr;
    ~Out() { palper_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

struct WordHandle {
    palper_word* w = nullptr;
    ~WordHandle() { palper_word_free(w); }
};

}  // namespace

TEST_CASE("word parse, render, free") {
    WordHandle h;
    REQUIRE(palper_word_parse("accabaccab", &h.w) == PALPER_OK);
    Out r;
    REQUIRE(palper_word_render(h.w, &r.s) == PALPER_OK);
    CHECK(r.str() == "accabaccab");
    WordHandle ints;
    REQUIRE(palper_word_parse("i:3,0,1,2", &ints.w) == PALPER_OK);
    Out r2;
    REQUIRE(palper_word_render(ints.w, &r2.s) == PALPER_OK);
    CHECK(r2.str() == "i:3,0,1,2");
}

TEST_CASE("parse errors set status and message") {
    palper_word* w = nullptr;
    CHECK(palper_word_parse("not a word!", &w) == PALPER_ERR_PARSE);
    CHECK(w == nullptr);
    CHECK(std::strlen(palper_last_error()) > 0);
    CHECK(palper_word_parse(nullptr, &w) != PALPER_OK);
}

TEST_CASE("detect returns one json object per occurrence") {
    WordHandle h;
    REQUIRE(palper_word_parse("accabaccab", &h.w) == PALPER_OK);
    Out nd;
    REQUIRE(palper_detect(h.w, &nd.s) == PALPER_OK);
    std::string text = nd.str();
    CHECK(text.find("\"start\"") != std::string::npos);
    CHECK(text.find("\"end\"") != std::string::npos);
    CHECK(text.find("\"half_period\"") != std::string::npos);
    // every line is a json object
    size_t start = 0;
    int lines = 0;
    while (start < text.size()) {
        size_t nl = text.find('\n', start);
        if (nl == std::string::npos) nl = text.size();
        std::string line = text.substr(start, nl - start);
        if (!line.empty()) {
            CHECK(line.front() == '{');
            CHECK(line.back() == '}');
            ++lines;
        }
        start = nl + 1;
    }
    CHECK(lines >= 1);
}

TEST_CASE("params lists the frozen parameterizations") {
    WordHandle h;
    REQUIRE(palper_word_parse("accabaccab", &h.w) == PALPER_OK);
    Out nd;
    REQUIRE(palper_params(h.w, &nd.s) == PALPER_OK);
    std::string text = nd.str();
    CHECK(text.find("5/2") != std::string::npos);
    CHECK(text.find("\"offset\"") != std::string::npos);
    CHECK(text.find("\"half_period\"") != std::string::npos);
}

TEST_CASE("construct dispatches on theorem name") {
    Out out;
    REQUIRE(palper_construct("periodic-palindrome", R"({"word":"aabaabaa","p":3})", &out.s) ==
            PALPER_OK);
    CHECK(out.str().find("\"period\":3") != std::string::npos);
    CHECK(out.str().find("\"p\"") != std::string::npos);
    CHECK(out.str().find("\"s\"") != std::string::npos);
    Out bad;
    CHECK(palper_construct("no-such-theorem", "{}", &bad.s) == PALPER_ERR_INVALID);
    Out junk;
    CHECK(palper_construct("periodic-palindrome", "not json", &junk.s) == PALPER_ERR_PARSE);
    Out wrong;
    CHECK(palper_construct("periodic-palindrome", R"({"word":"aabaab","p":3})", &wrong.s) ==
          PALPER_ERR_INVALID);
}

TEST_CASE("gword analysis") {
    Out out;
    REQUIRE(palper_gword(13, 49, 60, &out.s) == PALPER_OK);
    std::string text = out.str();
    CHECK(text.find("\"g\":12") != std::string::npos);
    CHECK(text.find("\"n\":48") != std::string::npos);
    Out bad;
    CHECK(palper_gword(10, 4, 12, &bad.s) == PALPER_ERR_INVALID);
}

TEST_CASE("table and diff round trip") {
    Out tsv;
    REQUIRE(palper_table(2, 3, 1, 12, 8, 2, 1, &tsv.s) == PALPER_OK);
    std::string text = tsv.str();
    CHECK(text.rfind("r1\tr2", 0) == 0);
    Out report;
    CHECK(palper_table_diff(2, 3, 1, 12, 8, 2, text.c_str(), &report.s) == PALPER_OK);
    // corrupt a digit and expect a mismatch report
    std::string broken = text;
    broken[broken.rfind('\t') + 1] = '9';
    Out report2;
    CHECK(palper_table_diff(2, 3, 1, 12, 8, 2, broken.c_str(), &report2.s) == PALPER_ERR_INVALID);
    CHECK(!report2.str().empty());
}

TEST_CASE("famous words and census") {
    WordHandle h;
    REQUIRE(palper_famous_word("thue-morse", 8, &h.w) == PALPER_OK);
    Out r;
    REQUIRE(palper_word_render(h.w, &r.s) == PALPER_OK);
    CHECK(r.str() == "abbabaab");
    palper_word* missing = nullptr;
    CHECK(palper_famous_word("nope", 8, &missing) == PALPER_ERR_INVALID);
    Out nd;
    REQUIRE(palper_census("thue-morse", 64, 32, 2, &nd.s) == PALPER_OK);
    CHECK(nd.str().find("\"prefix_len\":32") != std::string::npos);
    CHECK(nd.str().find("\"prefix_len\":64") != std::string::npos);
}

TEST_CASE("verify runs a suite") {
    Out out;
    REQUIRE(palper_verify("dpp", 6, 2, &out.s) == PALPER_OK);
    CHECK(out.str().find("\"ok\":true") != std::string::npos);
    Out bad;
    CHECK(palper_verify("no-such-suite", 0, 1, &bad.s) == PALPER_ERR_INVALID);
}
