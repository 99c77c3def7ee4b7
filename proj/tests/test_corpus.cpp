#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "palper/corpus.hpp"
#include "palper/palperiod.hpp"

using namespace palper;

namespace {

std::vector<int> letters_of(const Word& w) { return w.letters(); }

}  // namespace

TEST_CASE("thue-morse prefix") {
    CHECK(letters_of(thue_morse(16)) ==
          std::vector<int>{0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0});
    CHECK(thue_morse(0).empty());
    CHECK(thue_morse(1).letters() == std::vector<int>{0});
    // prefix property
    auto big = letters_of(thue_morse(100));
    auto small = letters_of(thue_morse(60));
    CHECK(std::equal(small.begin(), small.end(), big.begin()));
}

TEST_CASE("fibonacci prefix") {
    // a b a a b a b a a b a a b -> 0 1 0 0 1 0 1 0 0 1 0 0 1
    CHECK(letters_of(fibonacci_word(13)) ==
          std::vector<int>{0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1});
    auto big = letters_of(fibonacci_word(200));
    auto small = letters_of(fibonacci_word(50));
    CHECK(std::equal(small.begin(), small.end(), big.begin()));
}

TEST_CASE("kolakoski prefix") {
    // 1 2 2 1 1 2 1 2 2 1 2 2: the word equals its own run-length encoding
    auto v = letters_of(kolakoski(12));
    CHECK(v == std::vector<int>{1, 2, 2, 1, 1, 2, 1, 2, 2, 1, 2, 2});
    auto w = letters_of(kolakoski(300));
    std::vector<int> rle;
    for (size_t i = 0; i < w.size();) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        rle.push_back(static_cast<int>(j - i));
        i = j;
    }
    rle.pop_back();  // last run may be cut off
    CHECK(std::equal(rle.begin(), rle.end(), w.begin()));
}

TEST_CASE("famous word dispatch") {
    CHECK(famous_word("thue-morse", 8) == thue_morse(8));
    CHECK(famous_word("fibonacci", 8) == fibonacci_word(8));
    CHECK(famous_word("kolakoski", 8) == kolakoski(8));
    CHECK_THROWS_AS(famous_word("champernowne", 8), std::invalid_argument);
    CHECK_THROWS_AS(famous_word("thue-morse", -1), std::invalid_argument);
}

TEST_CASE("census counts match detection") {
    auto recs = census("thue-morse", 64, 16, 1);
    REQUIRE(recs.size() == 4);
    for (const auto& rec : recs) {
        Word w = thue_morse(rec.prefix_len);
        auto occs = find_pps_naive(w);
        CHECK(rec.count == static_cast<int>(occs.size()));
        std::map<int, int> hist;
        for (const auto& o : occs) ++hist[o.half_period.d];
        CHECK(rec.histogram == hist);
        CHECK(rec.name == "thue-morse");
    }
}

TEST_CASE("census is deterministic across thread counts") {
    auto one = census("fibonacci", 256, 32, 1);
    auto many = census("fibonacci", 256, 32, 5);
    REQUIRE(one.size() == many.size());
    for (size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].prefix_len == many[i].prefix_len);
        CHECK(one[i].count == many[i].count);
        CHECK(one[i].histogram == many[i].histogram);
        CHECK(one[i].max_density_pos == many[i].max_density_pos);
    }
}

TEST_CASE("max density position is covered by the most occurrences") {
    auto recs = census("kolakoski", 48, 48, 1);
    REQUIRE(recs.size() == 1);
    Word w = kolakoski(48);
    auto occs = find_pps_naive(w);
    std::vector<int> cover(static_cast<size_t>(w.size()) + 1, 0);
    for (const auto& o : occs)
        for (int i = o.span.start; i <= o.span.end; ++i) ++cover[static_cast<size_t>(i)];
    int best = 1;
    for (int i = 2; i <= w.size(); ++i)
        if (cover[static_cast<size_t>(i)] > cover[static_cast<size_t>(best)]) best = i;
    CHECK(recs[0].max_density_pos == best);
}
