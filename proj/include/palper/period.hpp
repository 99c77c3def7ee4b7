#pragma once

#include <optional>
#include <utility>

#include "palper/word.hpp"

namespace palper {

// A claim that some span of a word has a given period.  Facts are derived by
// the lemma operations below; check() validates a fact against actual letters.
struct PeriodFact {
    Span span;
    int period = 1;

    friend bool operator==(const PeriodFact& a, const PeriodFact& b) {
        return a.span == b.span && a.period == b.period;
    }
};

bool check(const PeriodFact& f, const Word& w);

// Fine and Wilf: a word of length len with periods p and q also has period
// gcd(p,q) once len >= p + q - gcd(p,q).
std::optional<int> fw_refine(int len, int p, int q);

// From periods p > q on one span: the prefix and the suffix of length
// |span| - q have period p - q.
std::pair<PeriodFact, PeriodFact> la_derive(const PeriodFact& f, const PeriodFact& g);

// A factor of length >= q with period r dividing q extends r to the whole span.
PeriodFact l4_extend(const PeriodFact& whole, const PeriodFact& inner);

// Two spans with the same period overlapping in >= period positions merge.
PeriodFact overlap_merge(const PeriodFact& left, const PeriodFact& right);

// Equal factors w[i+1..i+q] = w[j+1..j+q] with i+1 < j < i+q and q >= p
// refine period p to gcd(p, j-i).  The equality is verified on w.
PeriodFact equal_factor_refine(const Word& w, const PeriodFact& f, int i, int j, int q);

}  // namespace palper
