#pragma once

#include <utility>
#include <vector>

#include "palper/palindrome.hpp"
#include "palper/word.hpp"

namespace palper {

// p and s of the 2h-periodic skeleton: w is a prefix of (p s)^omega.
struct PSDecomposition {
    Word p;
    Word s;
};

// A certified palindromic periodicity of a span of an ambient word.
// offset is relative to the span start: the first essential centre sits at
// position (span.start - 1) + offset of the ambient word.
struct PalPeriodicity {
    Span span;
    HalfPos offset;
    HalfPos half_period;
    std::vector<HalfPos> essential_centres;  // absolute positions
    PSDecomposition ps;

    int period() const { return half_period.d; }
};

// True iff w is a palindromic periodicity with offset r (first essential
// centre) and half-period h: every lattice position r + k*h inside w is the
// centre of a palindromic prefix or suffix, the longest such prefix and
// suffix together cover w, |w| >= 2h, and w has period 2h.  With strict set,
// additionally requires max(|p|, |s|) >= 2 (the abstract's extra clause).
bool is_pal_periodicity(const Word& w, HalfPos r, HalfPos h, bool strict = false);

// p = w[1..2r-1], s = w[2r..2h]; requires is_pal_periodicity(w, r, h).
PSDecomposition decompose_ps(const Word& w, HalfPos r, HalfPos h);

// All (r, h) with is_pal_periodicity(w, r, h), ordered by (2h, 2r).
std::vector<std::pair<HalfPos, HalfPos>> enumerate_parameterizations(const Word& w);

enum class CentreParity { AllEven, Alternating, AllOdd };

// Maximum alphabet size of a palindromic periodicity with half-period h whose
// essential palindromes are all even, alternately odd/even, or all odd.
HalfPos max_alphabet_size(HalfPos h, CentreParity parity);

// One maximal occurrence found by detection.
struct PpOcc {
    Span span;
    HalfPos half_period;
    HalfPos offset;  // smallest doubled offset certifying (span, h)

    friend bool operator==(const PpOcc& a, const PpOcc& b) {
        return a.span == b.span && a.half_period == b.half_period && a.offset == b.offset;
    }
    friend bool operator<(const PpOcc& a, const PpOcc& b) {
        if (a.span.start != b.span.start) return a.span.start < b.span.start;
        if (a.span.end != b.span.end) return a.span.end < b.span.end;
        return a.half_period < b.half_period;
    }
};

// Maximal palindromic periodicities with h >= 1 and an attested period
// (span length >= 2h + 1), plus whole maximal unary runs as h = 1/2 entries.
// A triple is maximal when neither one-letter span extension admits the same
// h on a compatible centre lattice and no reported triple with the same h
// has a strictly larger span.
std::vector<PpOcc> find_maximal_pps(const Word& w);

// Same contract by exhaustive enumeration; correctness oracle.
std::vector<PpOcc> find_pps_naive(const Word& w);

// Validates and assembles the certified record for a span of an ambient word.
PalPeriodicity make_pal_periodicity(const Word& w, const Span& span, HalfPos r, HalfPos h);

}  // namespace palper
