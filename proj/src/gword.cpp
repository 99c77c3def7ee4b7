#include "palper/gword.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "palper/palperiod.hpp"

namespace palper {

namespace {

bool pal_in(const Word& w, int i, int j) {
    while (i < j) {
        if (w[i] != w[j]) return false;
        ++i;
        --j;
    }
    return true;
}

int overlap_of(const Span& a, const Span& b) {
    return std::min(a.end, b.end) - std::max(a.start, b.start) + 1;
}

}  // namespace

GWordParams gword_params(HalfPos r, HalfPos c, HalfPos h) {
    int dr = r.d, dc = c.d, dh = h.d;
    if (dh < 1) throw std::invalid_argument("half-period must be positive");
    if (!(dr < dc && dc < dr + dh)) throw std::invalid_argument("need r < c < r + h");
    int g = std::gcd(dc - dr, dh);
    if (g == dh) throw std::invalid_argument("degenerate: 2h = g, empty g-word");
    GWordParams p;
    p.offset_r = r;
    p.centre_c = c;
    p.half_period_h = h;
    p.g = g;
    p.n = dh - g;
    return p;
}

std::pair<HalfPos, HalfPos> essential_centres_in_gword(const GWordParams& p, int i) {
    int dr = p.offset_r.d, dh = p.half_period_h.d, n = p.n;
    std::vector<int> inside;
    int k0 = -(std::abs(dr) / dh + 2), k1 = (2 * n + std::abs(dr)) / dh + 2;
    // Containment here includes both half-position edges: the second centre
    // may sit at n + 1/2.
    for (int k = k0; k <= k1; ++k) {
        int v = dr + k * dh;
        if (1 <= v && v <= 2 * n + 1) inside.push_back(v);
    }
    if (inside.size() != 2 || inside[0] != dr || inside[1] != dr + dh)
        throw std::logic_error("lattice does not meet the two-centre lemma");
    return {HalfPos{2 * i + dr}, HalfPos{2 * i + dr + dh}};
}

GWordStep gword_step(const GWordParams& p) {
    if (!p.consistent()) throw std::invalid_argument("palindrome centre must satisfy 2c = n+1");
    int dr = p.offset_r.d, dc = p.centre_c.d, dh = p.half_period_h.d;
    int diff2 = 2 * (dc - dr);
    GWordStep out;
    if (diff2 == dh) {
        if (p.n != p.g) throw std::logic_error("terminal case with n != g");
        out.terminal = true;
        return out;
    }
    HalfPos r2, c2, h2;
    if (diff2 < dh) {
        r2 = HalfPos{2 * dc - dr - dh};
        c2 = HalfPos{dr};
        h2 = HalfPos{dr + dh - dc};
    } else {
        // The g-word is a palindrome, so reflecting it about its centre maps
        // the lattice to offset n+1-r-h and reduces to the other sub-case;
        // reflecting that result back gives:
        r2 = HalfPos{dr};
        c2 = HalfPos{2 * dc - dr - dh};
        h2 = HalfPos{dc - dr};
    }
    out.next = gword_params(r2, c2, h2);
    if (out.next.g != p.g) throw std::logic_error("sub-word changes g");
    if (!(2 * out.next.n >= p.n && out.next.n < p.n))
        throw std::logic_error("sub-word length outside [n/2, n)");
    if (!out.next.consistent()) throw std::logic_error("sub-word parameters inconsistent");
    return out;
}

PeriodFact gword_period(const Word& w, const GWordParams& p, int i, bool checked) {
    int N = w.size(), dh = p.half_period_h.d, g = p.g, n = p.n;
    if (!p.consistent()) throw std::invalid_argument("palindrome centre must satisfy 2c = n+1");
    if (n < 2 * g) throw std::invalid_argument("need n >= 2g");
    if (i < 0 || i + n > N) throw std::invalid_argument("g-word does not fit in the word");
    if (!pal_in(w, i + 1, i + n)) throw std::invalid_argument("embedded factor is not a palindrome");
    int dr_amb = ((2 * i + p.offset_r.d - 1) % dh + dh) % dh + 1;
    if (!is_pal_periodicity(w, HalfPos{dr_amb}, HalfPos{dh}))
        throw std::invalid_argument("ambient word is not a palindromic periodicity on this lattice");

    // Run the prefix recursion down to the base palindrome of length g.
    std::vector<int> lens{n};
    for (GWordParams cur = p;;) {
        GWordStep st = gword_step(cur);
        if (st.terminal) break;
        cur = st.next;
        lens.push_back(cur.n);
    }
    for (int len : lens)
        if (!pal_in(w, i + 1, i + len))
            throw std::logic_error("recursion prefix is not a palindrome");
    if (lens.back() != g) throw std::logic_error("recursion base has wrong length");
    // The g-word is a power of the base palindrome.
    for (int t = 1; t <= n; ++t)
        if (w[i + t] != w[i + (t - 1) % g + 1])
            throw std::logic_error("g-word is not a power of its base");
    // Rebuild the period fact bottom-up: each level's suffix is the reversal
    // of its prefix inside a palindrome, so both carry period g and merge.
    PeriodFact fact{Span(i + 1, i + lens.back()), g};
    for (int j = static_cast<int>(lens.size()) - 2; j >= 0; --j) {
        int nj = lens[j], nj1 = lens[j + 1];
        PeriodFact pref{Span(i + 1, i + nj1), g};
        PeriodFact suf{Span(i + nj - nj1 + 1, i + nj), g};
        if (checked && (!check(pref, w) || !check(suf, w)))
            throw std::logic_error("merge operand fails on letters");
        fact = 2 * nj1 - nj >= g ? overlap_merge(pref, suf)
                                 : PeriodFact{Span(i + 1, i + nj), g};  // exact square of a base power
    }

    // Grow the fact past one full ambient period using the period 2h
    // translations and reflections at essential centres, then extend.
    auto try_absorb = [&](const PeriodFact& f) {
        if (f.span.length() < g) return;
        if (fact.span.contains(f.span)) return;
        if (overlap_of(fact.span, f.span) >= g) fact = overlap_merge(fact, f);
    };
    int rounds = 4 * (N / dh + 2);
    while (fact.span.length() < dh && rounds-- > 0) {
        Span before = fact.span;
        for (int dir : {1, -1}) {
            int lo = std::max(fact.span.start + dir * dh, 1);
            int hi = std::min(fact.span.end + dir * dh, N);
            if (hi - lo + 1 >= g) try_absorb({Span(lo, hi), g});
        }
        for (int dc = dr_amb; dc <= 2 * N; dc += dh) {
            int e = dc - 1;  // palindromic prefix [1..e]
            if (e >= 1 && e <= N && pal_in(w, 1, e)) {
                int lo = fact.span.start, hi = std::min(fact.span.end, e);
                if (hi - lo + 1 >= g) try_absorb({Span(dc - hi, dc - lo), g});
            }
            int s = dc - N;  // palindromic suffix [s..N]
            if (s >= 1 && s <= N && pal_in(w, s, N)) {
                int lo = std::max(fact.span.start, s), hi = fact.span.end;
                if (hi - lo + 1 >= g) try_absorb({Span(dc - hi, dc - lo), g});
            }
        }
        if (fact.span == before) break;
    }
    PeriodFact whole{Span(1, N), g};
    if (fact.span.length() >= dh) {
        whole = l4_extend({Span(1, N), dh}, fact);
    } else if (!check(whole, w)) {
        throw std::logic_error("could not extend the g-period to the whole word");
    }
    if (checked && !check(whole, w)) throw std::logic_error("extended period fails on letters");
    return whole;
}

std::optional<PeriodFact> dpp_periodicity_lemma(const DoublePP& d, bool checked) {
    const Word& w = d.word;
    auto norm = [](int dr, int dhp) { return ((dr - 1) % dhp + dhp) % dhp + 1; };
    if (!is_pal_periodicity(w, HalfPos{norm(d.r1.d, d.h1.d)}, d.h1) ||
        !is_pal_periodicity(w, HalfPos{norm(d.r2.d, d.h2.d)}, d.h2))
        throw std::invalid_argument("word is not a palindromic periodicity for the given parameters");
    int g = std::gcd(std::abs(d.r2.d - d.r1.d), std::gcd(d.h1.d, d.h2.d));
    if (w.size() < d.h1.d + d.h2.d - g) return std::nullopt;
    PeriodFact f{Span(1, w.size()), g};
    if (checked && !check(f, w))
        throw std::logic_error("periodicity lemma conclusion fails on letters");
    return f;
}

}  // namespace palper
