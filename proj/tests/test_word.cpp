#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "palper/word.hpp"

using namespace palper;

TEST_CASE("halfpos fraction round trip") {
    CHECK(to_fraction(HalfPos{7}) == "7/2");
    CHECK(to_fraction(HalfPos{6}) == "3");
    CHECK(parse_halfpos("7/2") == HalfPos{7});
    CHECK(parse_halfpos("3.5") == HalfPos{7});
    CHECK(parse_halfpos("3") == HalfPos{6});
    CHECK(parse_halfpos("-5/2") == HalfPos{-5});
    CHECK_THROWS_AS(parse_halfpos("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_halfpos("3.25"), std::invalid_argument);
}

TEST_CASE("halfpos span membership") {
    // a-1/2 is in [a..b], b+1/2 is not
    CHECK(HalfPos{2 * 3 - 1}.in_span(3, 5));
    CHECK(HalfPos{2 * 5}.in_span(3, 5));
    CHECK_FALSE(HalfPos{2 * 5 + 1}.in_span(3, 5));
    CHECK_FALSE(HalfPos{2 * 3 - 2}.in_span(3, 5));
    CHECK(HalfPos{7}.is_integral() == false);
    CHECK(HalfPos{8}.as_int() == 4);
    CHECK_THROWS_AS(HalfPos{7}.as_int(), std::logic_error);
}

TEST_CASE("word parse and render are inverse") {
    for (const char* t : {"abba", "a", "i:3,0,1,2", "i:12,0,1,2,3,4,5,5,4,3,2,1,0"}) {
        Word w = Word::parse(t);
        CHECK(w.render() == t);
        CHECK(Word::parse(w.render()) == w);
    }
    CHECK_THROWS_AS(Word::parse("ab c"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("i:1,,2"), std::invalid_argument);
    CHECK(Word::parse("i:2,5").alphabet_size() == 6);
}

TEST_CASE("factor and indexing are 1-based") {
    Word w = Word::parse("abcde");
    CHECK(w.at(1) == 0);
    CHECK(w.at(5) == 4);
    CHECK_THROWS_AS(w.at(0), std::out_of_range);
    CHECK_THROWS_AS(w.at(6), std::out_of_range);
    CHECK(w.factor(2, 4) == Word::parse("bcd"));
    CHECK(w.factor(Span(3, 2)).empty());
    CHECK_THROWS_AS(Span(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(Span(4, 2), std::invalid_argument);
}

TEST_CASE("reverse and palindromes") {
    CHECK(reverse(Word::parse("abc")) == Word::parse("cba"));
    CHECK(is_palindrome(Word::parse("abba")));
    CHECK(is_palindrome(Word::parse("aba")));
    CHECK_FALSE(is_palindrome(Word::parse("ab")));
    CHECK(is_palindrome(Word::parse("a")));
}

TEST_CASE("periods") {
    Word w = Word::parse("abaababaab");
    CHECK(least_period(w) == 5);
    CHECK(has_period(w, 5));
    CHECK_FALSE(has_period(w, 4));
    CHECK(has_period(w, 10));  // vacuous at |w|
    CHECK(has_period(w, 11));
    CHECK(has_period(w, Span(1, 3), 2));
    CHECK_FALSE(has_period(w, Span(1, 5), 2));
    CHECK(least_period(Word::parse("aaaa")) == 1);
}

TEST_CASE("borders and the border-period duality") {
    Word w = Word::parse("abaababaab");
    auto bs = borders(w);
    // every border length k gives period |w| - k and vice versa
    for (int k : bs) {
        CHECK(k < w.size());
        CHECK(period_from_border(w, k) == w.size() - k);
        CHECK(has_period(w, w.size() - k));
    }
    for (int p = 1; p < w.size(); ++p)
        if (has_period(w, p))
            CHECK(std::find(bs.begin(), bs.end(), w.size() - p) != bs.end());
    CHECK_THROWS_AS(period_from_border(w, 4), std::invalid_argument);
    CHECK(borders(Word::parse("ab")).empty());
}
