#pragma once

#include <vector>

#include "palper/word.hpp"

namespace palper {

// Radius marker for "no palindrome at this centre" (only possible at
// half-integer centres with mismatched neighbours): -1/2.
inline constexpr HalfPos kEmptyRadius{-1};

// A palindrome occurrence: span [c-r .. c+r].
struct PalOcc {
    HalfPos centre;
    HalfPos radius;

    Span span() const {
        return Span((centre - radius).as_int(), (centre + radius).as_int());
    }
    int length() const { return radius.d + 1; }
    friend bool operator==(const PalOcc& a, const PalOcc& b) {
        return a.centre == b.centre && a.radius == b.radius;
    }
};

// Largest r with [c-r..c+r] inside [1..n] and palindromic; kEmptyRadius when
// even the two-letter seed mismatches.
HalfPos max_radius_at(const Word& w, HalfPos centre);

// Doubled radii for every doubled centre 2..2n, Manacher-style, O(n).
// radii[dc-2] is the doubled max radius at doubled centre dc.
std::vector<int> all_max_radii(const Word& w);

// Same array by naive expansion; test oracle.
std::vector<int> all_max_radii_naive(const Word& w);

// Maximal palindromes: nonempty and not extendable at either end or both.
std::vector<PalOcc> maximal_palindromes(const Word& w);

// Naive counterpart; test oracle.
std::vector<PalOcc> maximal_palindromes_naive(const Word& w);

// The i-th nested palindrome: same centre, radius r-i, 1 <= i <= floor(r).
PalOcc nested(const PalOcc& p, int i);

}  // namespace palper
