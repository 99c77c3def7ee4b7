#include "palper/palindrome.hpp"

#include <algorithm>

namespace palper {

HalfPos max_radius_at(const Word& w, HalfPos centre) {
    int n = w.size();
    if (!centre.in_span(1, n)) throw std::out_of_range("centre outside word");
    int dc = centre.d;
    int rr = dc % 2 == 0 ? 0 : -1;  // single letter vs empty seed
    while (true) {
        int a = (dc - rr) / 2 - 1;
        int b = (dc + rr) / 2 + 1;
        if (a < 1 || b > n || w[a] != w[b]) break;
        rr += 2;
    }
    return HalfPos::from_doubled(rr);
}

std::vector<int> all_max_radii_naive(const Word& w) {
    int n = w.size();
    std::vector<int> out;
    out.reserve(static_cast<size_t>(std::max(0, 2 * n - 1)));
    for (int dc = 2; dc <= 2 * n; ++dc)
        out.push_back(max_radius_at(w, HalfPos::from_doubled(dc)).d);
    return out;
}

std::vector<int> all_max_radii(const Word& w) {
    // Manacher on the gap-augmented sequence ^ # w1 # w2 ... wn # $ where
    // letter i sits at index 2i.  p[j] is the length (in letters of w) of the
    // longest palindrome centred at augmented index j, which equals doubled
    // centre j, so the doubled radius is p[j] - 1.
    int n = w.size();
    if (n == 0) return {};
    int m = 2 * n + 2;
    std::vector<int> t(static_cast<size_t>(m) + 1);
    t[0] = -2;
    for (int i = 1; i <= n; ++i) {
        t[static_cast<size_t>(2 * i - 1)] = -1;
        t[static_cast<size_t>(2 * i)] = w[i];
    }
    t[static_cast<size_t>(2 * n + 1)] = -1;
    t[static_cast<size_t>(2 * n + 2)] = -3;
    std::vector<int> p(static_cast<size_t>(m) + 1, 0);
    int centre = 0, right = 0;
    for (int j = 1; j <= 2 * n + 1; ++j) {
        if (j < right) p[static_cast<size_t>(j)] = std::min(right - j, p[static_cast<size_t>(2 * centre - j)]);
        while (t[static_cast<size_t>(j - p[static_cast<size_t>(j)] - 1)] ==
               t[static_cast<size_t>(j + p[static_cast<size_t>(j)] + 1)])
            ++p[static_cast<size_t>(j)];
        if (j + p[static_cast<size_t>(j)] > right) {
            centre = j;
            right = j + p[static_cast<size_t>(j)];
        }
    }
    std::vector<int> out;
    out.reserve(static_cast<size_t>(2 * n - 1));
    for (int dc = 2; dc <= 2 * n; ++dc) out.push_back(p[static_cast<size_t>(dc)] - 1);
    return out;
}

std::vector<PalOcc> maximal_palindromes_naive(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word");
    int n = w.size();
    std::vector<PalOcc> out;
    for (int dc = 2; dc <= 2 * n; ++dc) {
        HalfPos c = HalfPos::from_doubled(dc);
        HalfPos r = max_radius_at(w, c);
        if (r.d < 0) continue;
        auto blocked = [&](int ndc) {
            if (ndc < 2 || ndc > 2 * n) return false;
            return max_radius_at(w, HalfPos::from_doubled(ndc)).d >= r.d + 1;
        };
        if (blocked(dc - 1) || blocked(dc + 1)) continue;
        out.push_back({c, r});
    }
    return out;
}

std::vector<PalOcc> maximal_palindromes(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word");
    int n = w.size();
    auto rad = all_max_radii(w);
    auto rd = [&](int dc) { return dc < 2 || dc > 2 * n ? -1 : rad[static_cast<size_t>(dc - 2)]; };
    std::vector<PalOcc> out;
    for (int dc = 2; dc <= 2 * n; ++dc) {
        int rr = rd(dc);
        if (rr < 0) continue;
        // One-sided extensions are the palindromes centred at dc +- 1 with
        // doubled radius rr + 1; the two-sided extension is excluded by rr
        // being maximal already.
        if (rd(dc - 1) >= rr + 1 || rd(dc + 1) >= rr + 1) continue;
        out.push_back({HalfPos::from_doubled(dc), HalfPos::from_doubled(rr)});
    }
    return out;
}

PalOcc nested(const PalOcc& p, int i) {
    if (i < 1 || 2 * i > p.radius.d) throw std::out_of_range("nesting depth");
    return {p.centre, HalfPos::from_doubled(p.radius.d - 2 * i)};
}

}  // namespace palper
