#include "palper/period.hpp"

#include <numeric>

namespace palper {

bool check(const PeriodFact& f, const Word& w) {
    return has_period(w, f.span, f.period);
}

std::optional<int> fw_refine(int len, int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("periods must be positive");
    int g = std::gcd(p, q);
    if (len >= p + q - g) return g;
    return std::nullopt;
}

std::pair<PeriodFact, PeriodFact> la_derive(const PeriodFact& f, const PeriodFact& g) {
    if (!(f.span == g.span)) throw std::invalid_argument("facts on different spans");
    int p = f.period, q = g.period;
    if (p <= q) throw std::invalid_argument("requires p > q");
    int len = f.span.length();
    if (len < q) throw std::invalid_argument("span shorter than q");
    PeriodFact prefix{Span(f.span.start, f.span.end - q), p - q};
    PeriodFact suffix{Span(f.span.start + q, f.span.end), p - q};
    return {prefix, suffix};
}

PeriodFact l4_extend(const PeriodFact& whole, const PeriodFact& inner) {
    if (!whole.span.contains(inner.span))
        throw std::invalid_argument("inner span not contained in whole");
    if (inner.span.length() < whole.period)
        throw std::invalid_argument("inner factor shorter than outer period");
    if (whole.period % inner.period != 0)
        throw std::invalid_argument("inner period must divide outer period");
    return {whole.span, inner.period};
}

PeriodFact overlap_merge(const PeriodFact& left, const PeriodFact& right) {
    if (left.period != right.period) throw std::invalid_argument("periods differ");
    const PeriodFact& a = left.span.start <= right.span.start ? left : right;
    const PeriodFact& b = left.span.start <= right.span.start ? right : left;
    int overlap = std::min(a.span.end, b.span.end) - b.span.start + 1;
    if (overlap < left.period) throw std::invalid_argument("overlap shorter than period");
    return {Span(a.span.start, std::max(a.span.end, b.span.end)), left.period};
}

PeriodFact equal_factor_refine(const Word& w, const PeriodFact& f, int i, int j, int q) {
    if (!(i + 1 < j && j < i + q)) throw std::invalid_argument("need i+1 < j < i+q");
    if (q < f.period) throw std::invalid_argument("need q >= p");
    if (i + 1 < f.span.start || j + q > f.span.end)
        throw std::invalid_argument("factors outside the fact's span");
    for (int t = 1; t <= q; ++t)
        if (w[i + t] != w[j + t]) throw std::invalid_argument("factors are not equal");
    return {f.span, std::gcd(f.period, j - i)};
}

}  // namespace palper
