#include "palper/palperiod.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace palper {

namespace {

bool pal_range(const Word& w, int i, int j) {
    while (i < j) {
        if (w[i] != w[j]) return false;
        ++i;
        --j;
    }
    return true;
}

// Consecutive-match counts for period p: cnt[i] = longest run of positions
// i, i+1, ... with w[t] = w[t+p].  [a..b] has period p iff b <= a+p+cnt[a]-1.
std::vector<int> match_counts(const Word& w, int p) {
    int n = w.size();
    std::vector<int> cnt(static_cast<size_t>(n) + 2, 0);
    for (int i = n - p; i >= 1; --i)
        cnt[static_cast<size_t>(i)] = w[i] == w[i + p] ? cnt[static_cast<size_t>(i + 1)] + 1 : 0;
    return cnt;
}

// The alternative-definition check on the span [a..b] of w, without copying.
bool pps_span(const Word& w, int a, int b, int dr, int dh, bool check_period) {
    int len = b - a + 1;
    if (dh < 1 || dr < 1 || dr > dh || len < dh) return false;
    if (check_period) {
        for (int i = a; i + dh <= b; ++i)
            if (w[i] != w[i + dh]) return false;
    }
    int best_pref = -1, best_suf = -1;
    for (int dabs = 2 * (a - 1) + dr; dabs <= 2 * b; dabs += dh) {
        int pref_end = dabs - a;  // prefix of the span is [a..pref_end]
        bool pref_ok = pref_end <= b && pal_range(w, a, pref_end);
        int suf_start = dabs - b;
        bool suf_ok = suf_start >= a && pal_range(w, suf_start, b);
        if (!pref_ok && !suf_ok) return false;
        if (pref_ok) best_pref = std::max(best_pref, pref_end - a + 1);
        if (suf_ok) best_suf = std::max(best_suf, b - suf_start + 1);
    }
    return best_pref >= 0 && best_suf >= 0 && best_pref + best_suf >= len;
}

// Maximal unary runs of length >= 2, reported as h = 1/2 occurrences.
void collect_unary_runs(const Word& w, std::vector<PpOcc>& out) {
    int n = w.size();
    int a = 1;
    while (a <= n) {
        int b = a;
        while (b < n && w[b + 1] == w[a]) ++b;
        if (b > a) out.push_back({Span(a, b), HalfPos{1}, HalfPos{1}});
        a = b + 1;
    }
}

int min_certifying_dr(const Word& w, const Span& sp, int dh) {
    for (int dr = 1; dr <= dh; ++dr)
        if (pps_span(w, sp.start, sp.end, dr, dh, true)) return dr;
    return 0;
}

// Shared maximality semantics: drop triples whose one-letter span extension
// admits the same h on a compatible lattice, then strict-superset dominance,
// then canonical order.
std::vector<PpOcc> filter_maximal(const Word& w, std::vector<std::tuple<int, int, int>> cands) {
    int n = w.size();
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<std::tuple<int, int, int>> stable;
    for (auto [a, b, dh] : cands) {
        bool extendable = false;
        for (int dr = 1; dr <= dh && !extendable; ++dr) {
            if (!pps_span(w, a, b, dr, dh, true)) continue;
            if (b < n && pps_span(w, a, b + 1, dr, dh, true)) extendable = true;
            if (a > 1) {
                int dr2 = dr + 2;
                if (dr2 > dh) dr2 -= dh;
                if (pps_span(w, a - 1, b, dr2, dh, true)) extendable = true;
            }
        }
        if (!extendable) stable.push_back({a, b, dh});
    }
    std::vector<PpOcc> out;
    for (auto [a, b, dh] : stable) {
        bool dominated = false;
        for (auto [a2, b2, dh2] : stable)
            if (dh2 == dh && a2 <= a && b <= b2 && (a2 < a || b < b2)) dominated = true;
        if (dominated) continue;
        int dr = min_certifying_dr(w, Span(a, b), dh);
        out.push_back({Span(a, b), HalfPos{dh}, HalfPos{dr}});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool is_pal_periodicity(const Word& w, HalfPos r, HalfPos h, bool strict) {
    if (w.empty()) return false;
    if (!pps_span(w, 1, w.size(), r.d, h.d, true)) return false;
    if (strict && std::max(r.d - 1, h.d - r.d + 1) < 2) return false;
    return true;
}

PSDecomposition decompose_ps(const Word& w, HalfPos r, HalfPos h) {
    if (!is_pal_periodicity(w, r, h))
        throw std::invalid_argument("not a palindromic periodicity for (r, h)");
    Word p = w.factor(1, r.d - 1);
    Word s = w.factor(r.d, h.d);
    // w is a prefix of (p s)^omega by construction; assert it anyway.
    for (int i = 1; i <= w.size(); ++i) {
        int k = (i - 1) % h.d;
        int expect = k < p.size() ? p[k + 1] : s[k - p.size() + 1];
        if (w[i] != expect) throw std::logic_error("decomposition does not regenerate the word");
    }
    if (!is_palindrome(p) || !is_palindrome(s))
        throw std::logic_error("decomposition parts are not palindromes");
    return {std::move(p), std::move(s)};
}

std::vector<std::pair<HalfPos, HalfPos>> enumerate_parameterizations(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word");
    std::vector<std::pair<HalfPos, HalfPos>> out;
    for (int dh = 1; dh <= w.size(); ++dh)
        for (int dr = 1; dr <= dh; ++dr)
            if (is_pal_periodicity(w, HalfPos{dr}, HalfPos{dh}))
                out.push_back({HalfPos{dr}, HalfPos{dh}});
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::tie(x.second.d, x.first.d) < std::tie(y.second.d, y.first.d);
    });
    return out;
}

HalfPos max_alphabet_size(HalfPos h, CentreParity parity) {
    if (h.d < 1) throw std::invalid_argument("half-period must be at least 1/2");
    switch (parity) {
        case CentreParity::AllEven:
            if (!h.is_integral())
                throw std::invalid_argument("all-even palindromes force an integral half-period");
            return h;
        case CentreParity::Alternating:
            if (h.is_integral())
                throw std::invalid_argument("alternating parities force a non-integral half-period");
            return HalfPos{h.d + 1};
        case CentreParity::AllOdd:
            if (!h.is_integral())
                throw std::invalid_argument("all-odd palindromes force an integral half-period");
            return HalfPos{h.d + 2};
    }
    throw std::logic_error("unreachable");
}

std::vector<PpOcc> find_pps_naive(const Word& w) {
    int n = w.size();
    if (n < 2) throw std::invalid_argument("detection needs at least two letters");
    std::vector<std::tuple<int, int, int>> cands;
    for (int dh = 2; dh < n; ++dh) {
        auto cnt = match_counts(w, dh);
        for (int a = 1; a + dh <= n; ++a) {
            int bmax = std::min(n, a + dh + cnt[static_cast<size_t>(a)] - 1);
            for (int b = a + dh; b <= bmax; ++b)
                for (int dr = 1; dr <= dh; ++dr)
                    if (pps_span(w, a, b, dr, dh, false)) {
                        cands.push_back({a, b, dh});
                        break;
                    }
        }
    }
    auto out = filter_maximal(w, std::move(cands));
    std::vector<PpOcc> runs;
    collect_unary_runs(w, runs);
    out.insert(out.end(), runs.begin(), runs.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PpOcc> find_maximal_pps(const Word& w) {
    int n = w.size();
    if (n < 2) throw std::invalid_argument("detection needs at least two letters");
    auto rad = all_max_radii(w);
    auto rd = [&](int dc) {
        return dc < 2 || dc > 2 * n ? -1 : rad[static_cast<size_t>(dc - 2)];
    };
    // Full per-class validity for span [a..b], lattice residue rho (doubled,
    // mod dh): every lattice centre prefix-capable or suffix-capable, plus
    // coverage.  Period dh is guaranteed by the enclosing periodic interval.
    auto class_valid = [&](int a, int b, int dh, int rho) {
        int first = 2 * a - 1 + (((rho - (2 * a - 1)) % dh) + dh) % dh;
        int best_pref = -1, best_suf = -1;
        for (int dabs = first; dabs <= 2 * b; dabs += dh) {
            int rr = rd(dabs);
            bool pref_ok = rr >= dabs - 2 * a && dabs - a <= b;
            bool suf_ok = rr >= 2 * b - dabs && dabs - b >= a;
            if (!pref_ok && !suf_ok) return false;
            if (pref_ok) best_pref = std::max(best_pref, dabs - 2 * a + 1);
            if (suf_ok) best_suf = std::max(best_suf, 2 * b - dabs + 1);
        }
        return best_pref >= 0 && best_suf >= 0 && best_pref + best_suf >= b - a + 1;
    };
    std::vector<std::tuple<int, int, int>> cands;
    for (int dh = 2; dh < n; ++dh) {
        auto cnt = match_counts(w, dh);
        int i = 1;
        while (i + dh <= n) {
            if (cnt[static_cast<size_t>(i)] == 0) {
                ++i;
                continue;
            }
            int A = i, B = i + dh + cnt[static_cast<size_t>(i)] - 1;  // maximal dh-periodic interval
            i = B - dh + 2;  // next possible block start
            for (int rho = 0; rho < dh; ++rho) {
                int a = A;
                while (a + dh <= B) {
                    int first = 2 * a - 1 + (((rho - (2 * a - 1)) % dh) + dh) % dh;
                    int limit = B;
                    int binding_req = a + 1;
                    bool dead = false;
                    for (int dabs = first; dabs <= 2 * limit; dabs += dh) {
                        int rr = rd(dabs);
                        if (rr >= dabs - 2 * a) continue;  // prefix-capable for any b
                        int cap = (dabs + rr) / 2;         // else suffix needs b <= cap
                        int req = (dabs - rr) / 2;         // a making this centre capable
                        if (cap < limit) {
                            limit = cap;
                            binding_req = req;
                        } else if (cap == limit) {
                            binding_req = std::max(binding_req, req);
                        }
                        if (limit < a + dh) {
                            dead = true;
                            binding_req = std::max(a + 1, req);
                            break;
                        }
                    }
                    if (dead) {
                        a = std::max(a + 1, binding_req);
                        continue;
                    }
                    int b = limit;
                    if (class_valid(a, b, dh, rho)) {
                        cands.push_back({a, b, dh});
                        if (b >= B) break;
                        a = std::max(a + 1, binding_req);
                    } else {
                        // Coverage failure; look for a shorter right end.
                        int tries = 0, b2 = b - 1;
                        while (b2 >= a + dh && tries < 4 * ((b - a) / dh + 2)) {
                            if (class_valid(a, b2, dh, rho)) {
                                cands.push_back({a, b2, dh});
                                break;
                            }
                            --b2;
                            ++tries;
                        }
                        ++a;
                    }
                }
            }
        }
    }
    auto out = filter_maximal(w, std::move(cands));
    std::vector<PpOcc> runs;
    collect_unary_runs(w, runs);
    out.insert(out.end(), runs.begin(), runs.end());
    std::sort(out.begin(), out.end());
    return out;
}

PalPeriodicity make_pal_periodicity(const Word& w, const Span& span, HalfPos r, HalfPos h) {
    Word factor = w.factor(span);
    if (!is_pal_periodicity(factor, r, h))
        throw std::invalid_argument("span is not a palindromic periodicity for (r, h)");
    PalPeriodicity out;
    out.span = span;
    out.offset = r;
    out.half_period = h;
    for (int dabs = 2 * (span.start - 1) + r.d; dabs <= 2 * span.end; dabs += h.d)
        out.essential_centres.push_back(HalfPos{dabs});
    out.ps = decompose_ps(factor, r, h);
    return out;
}

}  // namespace palper
