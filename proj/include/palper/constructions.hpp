#pragma once

#include "palper/palperiod.hpp"

namespace palper {

// Two palindrome occurrences in one word with c2 > c1.
struct CrossingPair {
    PalOcc p1;
    PalOcc p2;
};

// A palindrome with period p and |w| >= 2p+1 is a palindromic periodicity
// with period p over its whole length.
PalPeriodicity from_periodic_palindrome(const Word& w, int p);

struct ReversePrefixResult {
    Word w;
    PalPeriodicity pp;
    std::vector<PalOcc> proof_palindromes;
};

// The common prefix of u'u^omega and v'v^omega (v the reverse of u) is a
// palindromic periodicity with period |u|.  u'/v' are suffixes of u/v given
// by length; target_len >= |u|.
ReversePrefixResult from_reverse_prefixes(const Word& u, int u_suffix_len, int v_suffix_len,
                                          int target_len);

// Intersecting palindromes containing each other's centres, neither a proper
// factor of the other: the union has period 2(c2 - c1).
PalPeriodicity from_crossing_palindromes(const Word& w, const CrossingPair& pair);

// Whole-word palindrome with a nested inner palindrome w[k+1..k+l] containing
// the word centre: a central factor is a palindromic periodicity whose period
// is twice the distance between the two centres.
PalPeriodicity from_nested_crossing(const Word& w, const PalOcc& inner);

// Intersecting palindromes [a..b], [c..d] with a <= c <= b <= d where at
// least one does not contain the other's centre: the union [a..d] has
// half-period (c+d-a-b)/2.
PalPeriodicity from_chained_palindromes(const Word& w, const CrossingPair& pair);

// A palindromic border of length m >= |w|/2 makes w a palindromic
// periodicity with period |w| - m.
PalPeriodicity from_palindromic_border(const Word& w, int m);

}  // namespace palper
