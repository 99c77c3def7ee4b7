#pragma once

#include <optional>
#include <utility>

#include "palper/period.hpp"
#include "palper/word.hpp"

namespace palper {

// Parameters of a g-word: a palindrome of length n = 2h - g grafted into a
// palindromic periodicity, with essential-centre lattice offset r, palindrome
// centre c and half-period h (all in local 1-based coordinates).
struct GWordParams {
    HalfPos offset_r;
    HalfPos centre_c;
    HalfPos half_period_h;
    int g = 0;  // gcd(2|c-r|, 2h)
    int n = 0;  // 2h - g

    // The palindrome centre matches the word length: 2c = n + 1.
    bool consistent() const { return centre_c.d == n + 1; }
};

// Computes g and n; rejects the degenerate case 2h = g (empty g-word) and
// requires r < c < r + h.
GWordParams gword_params(HalfPos r, HalfPos c, HalfPos h);

// The two lattice points inside the g-word embedded at offset i:
// (i + r, i + r + h).  Asserts both lie in [i+1 .. i+n] and no third does.
std::pair<HalfPos, HalfPos> essential_centres_in_gword(const GWordParams& p, int embed_offset_i);

// One step of the prefix recursion.  Terminal when 2(c - r) = h: the whole
// g-word is a palindrome of length g.  Otherwise the prefix of length
// n' = 2h' - g is again a g-word with the returned parameters.
struct GWordStep {
    bool terminal = false;
    GWordParams next{};
};

GWordStep gword_step(const GWordParams& p);

// The g-word w[i+1..i+n] has period g, and the period extends to all of w.
// Requires: w a palindromic periodicity whose lattice passes through i + r
// with half-period h; w[i+1..i+n] a palindrome; n >= 2g.
PeriodFact gword_period(const Word& w, const GWordParams& p, int i, bool checked = true);

// A word that is a palindromic periodicity in two ways.
struct DoublePP {
    Word word;
    HalfPos r1, h1;
    HalfPos r2, h2;
};

// If |w| >= 2h1 + 2h2 - gcd(2(r2-r1), 2h1, 2h2), the word has that gcd as a
// period; absent when the length bound fails.
std::optional<PeriodFact> dpp_periodicity_lemma(const DoublePP& d, bool checked = true);

}  // namespace palper
