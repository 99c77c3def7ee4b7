#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "palper/constructions.hpp"

using namespace palper;

namespace {

std::vector<PalOcc> pal_occurrences(const Word& w) {
    std::vector<PalOcc> out;
    auto rad = all_max_radii(w);
    for (int dc = 2; dc <= 2 * w.size(); ++dc) {
        int rmax = rad[static_cast<size_t>(dc - 2)];
        for (int rr = dc % 2 == 0 ? 0 : 1; rr <= rmax; rr += 2)
            out.push_back({HalfPos{dc}, HalfPos{rr}});
    }
    return out;
}

Word random_word(std::mt19937& rng, int len, int alpha) {
    std::vector<int> v(static_cast<size_t>(len));
    for (auto& x : v) x = static_cast<int>(rng() % alpha);
    return Word(v, alpha);
}

}  // namespace

TEST_CASE("periodic palindrome") {
    Word w = Word::parse("aabaabaa");
    auto pp = from_periodic_palindrome(w, 3);
    CHECK(pp.period() == 3);
    CHECK(pp.span == Span(1, 8));
    CHECK(is_palindrome(pp.ps.p));
    CHECK(is_palindrome(pp.ps.s));
    CHECK_THROWS_AS(from_periodic_palindrome(Word::parse("aabaab"), 3), std::invalid_argument);
    CHECK_THROWS_AS(from_periodic_palindrome(w, 4), std::invalid_argument);
}

TEST_CASE("reverse prefixes") {
    // "ab" + (aab)^omega and "a" + (baa)^omega share every prefix
    auto res = from_reverse_prefixes(Word::parse("aab"), 2, 1, 8);
    CHECK(res.w == Word::parse("abaabaab"));
    CHECK(res.pp.period() == 3);
    CHECK(res.pp.span == Span(1, 8));
    CHECK_FALSE(res.proof_palindromes.empty());
    for (const auto& p : res.proof_palindromes) CHECK(is_palindrome(res.w.factor(p.span())));
    CHECK_THROWS_AS(from_reverse_prefixes(Word::parse("aab"), 0, 0, 8), std::invalid_argument);
    CHECK_THROWS_AS(from_reverse_prefixes(Word::parse("aab"), 2, 1, 2), std::invalid_argument);
}

TEST_CASE("crossing palindromes, concrete") {
    Word w = Word::parse("accabaccab");
    CrossingPair pair{{HalfPos{10}, HalfPos{8}}, {HalfPos{15}, HalfPos{5}}};
    auto pp = from_crossing_palindromes(w, pair);
    CHECK(pp.period() == 5);
    CHECK(pp.span == Span(1, 10));
    CHECK(has_period(w, pp.span, pp.period()));
}

TEST_CASE("crossing and chained palindromes, random sweep") {
    std::mt19937 rng(2024);
    long long crossing = 0, chained = 0;
    for (int t = 0; t < 300; ++t) {
        Word w = random_word(rng, 2 + static_cast<int>(rng() % 12), 2);
        auto occs = pal_occurrences(w);
        for (const auto& o1 : occs)
            for (const auto& o2 : occs) {
                int dc1 = o1.centre.d, dc2 = o2.centre.d, r1 = o1.radius.d, r2 = o2.radius.d;
                if (dc2 <= dc1) continue;
                if (dc2 - r2 <= dc1 && dc2 <= dc1 + r1 && dc1 - r1 <= dc2 - r2 &&
                    dc1 + r1 <= dc2 + r2) {
                    auto pp = from_crossing_palindromes(w, {o1, o2});
                    REQUIRE(pp.period() == dc2 - dc1);
                    REQUIRE(has_period(w, pp.span, pp.period()));
                    ++crossing;
                }
                int a = (dc1 - r1) / 2, b = (dc1 + r1) / 2;
                int c = (dc2 - r2) / 2, d = (dc2 + r2) / 2;
                if (a < c && c <= b && b < d && (2 * b < c + d || 2 * c > a + b)) {
                    auto pp = from_chained_palindromes(w, {o1, o2});
                    REQUIRE(pp.period() == c + d - a - b);
                    REQUIRE(pp.span == Span(a, d));
                    REQUIRE(has_period(w, pp.span, pp.period()));
                    ++chained;
                }
            }
    }
    CHECK(crossing > 100);
    CHECK(chained > 100);
}

TEST_CASE("nested crossing, random palindromes") {
    std::mt19937 rng(808);
    long long fired = 0;
    for (int t = 0; t < 400; ++t) {
        int len = 3 + static_cast<int>(rng() % 11);
        std::vector<int> v(static_cast<size_t>(len));
        for (int i = 0; 2 * i < len; ++i) {
            int letter = static_cast<int>(rng() % 2);
            v[static_cast<size_t>(i)] = letter;
            v[static_cast<size_t>(len - 1 - i)] = letter;
        }
        Word w(v, 2);
        int n = w.size();
        for (const auto& inner : pal_occurrences(w)) {
            Span isp = inner.span();
            int k = isp.start - 1, l = isp.length();
            if (!(k >= 1 && k + l <= n - 1)) continue;
            if (!(2 * (k + 1) <= n + 1 && n + 1 <= 2 * (k + l))) continue;
            if (2 * k + l + 1 == n + 1) continue;  // concentric
            auto pp = from_nested_crossing(w, inner);
            REQUIRE(pp.period() == std::abs(2 * k + l + 1 - (n + 1)));
            REQUIRE(has_period(w, pp.span, pp.period()));
            ++fired;
        }
    }
    CHECK(fired > 100);
}

TEST_CASE("palindromic border") {
    Word w = Word::parse("abaaba");
    auto pp = from_palindromic_border(w, 3);
    CHECK(pp.period() == 3);
    CHECK(pp.span == Span(1, 6));
    CHECK_THROWS_AS(from_palindromic_border(w, 2), std::invalid_argument);
    // border must be palindromic
    CHECK_THROWS_AS(from_palindromic_border(Word::parse("abab"), 2), std::invalid_argument);
    // and long enough
    CHECK_THROWS_AS(from_palindromic_border(Word::parse("abcba"), 1), std::invalid_argument);
}

TEST_CASE("palindromic border, random sweep") {
    std::mt19937 rng(606);
    long long fired = 0;
    for (int t = 0; t < 2000; ++t) {
        Word w = random_word(rng, 2 + static_cast<int>(rng() % 12), 2);
        int n = w.size();
        for (int m = (n + 1) / 2; m < n; ++m) {
            bool border = true;
            for (int i = 1; i <= m && border; ++i) border = w[i] == w[n - m + i];
            if (!border || !is_palindrome(w.factor(1, m))) continue;
            auto pp = from_palindromic_border(w, m);
            REQUIRE(pp.period() == n - m);
            REQUIRE(has_period(w, pp.span, pp.period()));
            ++fired;
        }
    }
    CHECK(fired > 100);
}
