#include "palper/constructions.hpp"

#include <algorithm>

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

// Offset of the lattice through absolute doubled centre dabs, relative to the
// span starting at span_start, reduced into [1..dh].
int lattice_offset(int dabs, int span_start, int dh) {
    int rel = dabs - 2 * (span_start - 1);
    return ((rel - 1) % dh + dh) % dh + 1;
}

PalPeriodicity certify(const Word& w, const Span& sp, int dabs, int dh) {
    return make_pal_periodicity(w, sp, HalfPos{lattice_offset(dabs, sp.start, dh)}, HalfPos{dh});
}

// Verifies the occurrence really is a palindrome of w and fits inside it.
void require_palindrome(const Word& w, const PalOcc& occ, const char* what) {
    if (occ.radius.d < 0) throw std::invalid_argument(std::string(what) + ": empty palindrome");
    int lo = (occ.centre - occ.radius).d, hi = (occ.centre + occ.radius).d;
    if (lo % 2 != 0 || lo < 2 || hi > 2 * w.size())
        throw std::invalid_argument(std::string(what) + ": span outside the word");
    if (!pal_in(w, lo / 2, hi / 2))
        throw std::invalid_argument(std::string(what) + ": span is not a palindrome");
}

// Direct branch of the nested-crossing corollary: inner centre left of the
// word centre.  k, l as in inner = w[k+1..k+l].
PalPeriodicity nested_crossing_direct(const Word& w, int k, int l) {
    int n = w.size();
    int ci = 2 * k + l + 1;                     // doubled inner centre
    return certify(w, Span(k + 1, n - k), ci, (n + 1) - ci);
}

}  // namespace

PalPeriodicity from_periodic_palindrome(const Word& w, int p) {
    if (p < 1) throw std::invalid_argument("period must be positive");
    if (!is_palindrome(w)) throw std::invalid_argument("word is not a palindrome");
    if (!has_period(w, p)) throw std::invalid_argument("word does not have the claimed period");
    if (w.size() < 2 * p + 1) throw std::invalid_argument("word shorter than 2p+1");
    // The lattice runs through the word centre.
    return certify(w, Span(1, w.size()), w.size() + 1, p);
}

ReversePrefixResult from_reverse_prefixes(const Word& u, int u_suffix_len, int v_suffix_len,
                                          int target_len) {
    int n = u.size();
    if (n < 1) throw std::invalid_argument("empty base word");
    if (u_suffix_len < 0 || u_suffix_len > n || v_suffix_len < 0 || v_suffix_len > n)
        throw std::invalid_argument("suffix length out of range");
    if (target_len < n) throw std::invalid_argument("target length shorter than |u|");
    Word v = reverse(u);
    auto unroll = [&](const Word& base, int suffix_len) {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(target_len));
        for (int i = n - suffix_len + 1; i <= n && static_cast<int>(out.size()) < target_len; ++i)
            out.push_back(base[i]);
        while (static_cast<int>(out.size()) < target_len)
            out.push_back(base[static_cast<int>(out.size() - suffix_len) % n + 1]);
        return Word(out, base.alphabet_size());
    };
    Word w1 = unroll(u, u_suffix_len);
    Word w2 = unroll(v, v_suffix_len);
    if (w1 != w2) throw std::invalid_argument("the two infinite-word prefixes disagree");

    int dr = 0;
    for (int cand = 1; cand <= n && dr == 0; ++cand)
        if (is_pal_periodicity(w1, HalfPos{cand}, HalfPos{n})) dr = cand;
    if (dr == 0) throw std::logic_error("no certifying offset found");
    ReversePrefixResult res;
    res.pp = make_pal_periodicity(w1, Span(1, target_len), HalfPos{dr}, HalfPos{n});
    // Longest palindromic prefix and suffix among the essential centres.
    PalOcc best_pref{HalfPos{0}, kEmptyRadius}, best_suf{HalfPos{0}, kEmptyRadius};
    for (HalfPos c : res.pp.essential_centres) {
        int pref_end = c.d - 1, suf_start = c.d - target_len;
        if (pref_end >= 1 && pref_end <= target_len && pal_in(w1, 1, pref_end) &&
            pref_end - 1 > best_pref.radius.d)
            best_pref = {c, HalfPos{pref_end - 1}};
        if (suf_start >= 1 && suf_start <= target_len && pal_in(w1, suf_start, target_len) &&
            target_len - suf_start > best_suf.radius.d)
            best_suf = {c, HalfPos{target_len - suf_start}};
    }
    if (best_pref.radius.d >= 0) res.proof_palindromes.push_back(best_pref);
    if (best_suf.radius.d >= 0) res.proof_palindromes.push_back(best_suf);
    res.w = std::move(w1);
    return res;
}

PalPeriodicity from_crossing_palindromes(const Word& w, const CrossingPair& pair) {
    require_palindrome(w, pair.p1, "P1");
    require_palindrome(w, pair.p2, "P2");
    int dc1 = pair.p1.centre.d, dc2 = pair.p2.centre.d;
    int dr1 = pair.p1.radius.d, dr2 = pair.p2.radius.d;
    if (dc2 <= dc1) throw std::invalid_argument("centres must satisfy c2 > c1");
    if (!(dc2 - dr2 <= dc1 && dc2 <= dc1 + dr1 && dc1 - dr1 <= dc2 - dr2 &&
          dc1 + dr1 <= dc2 + dr2))
        throw std::invalid_argument("palindromes do not cross as required");
    Span sp((dc1 - dr1) / 2, (dc2 + dr2) / 2);
    return certify(w, sp, dc1, dc2 - dc1);
}

PalPeriodicity from_nested_crossing(const Word& w, const PalOcc& inner) {
    int n = w.size();
    if (!is_palindrome(w)) throw std::invalid_argument("outer word is not a palindrome");
    require_palindrome(w, inner, "inner");
    Span isp = inner.span();
    int k = isp.start - 1, l = isp.length();
    if (!(k >= 1 && k + l <= n - 1))
        throw std::invalid_argument("inner palindrome must avoid both ends");
    if (!(2 * (k + 1) <= n + 1 && n + 1 <= 2 * (k + l)))
        throw std::invalid_argument("inner palindrome must contain the word centre");
    int ci = 2 * k + l + 1, cm = n + 1;
    if (ci == cm) throw std::invalid_argument("degenerate: coinciding centres");
    if (ci < cm) return nested_crossing_direct(w, k, l);
    // Mirror image: apply the direct case to the reversed word and reflect.
    Word wr = reverse(w);
    int kr = n - k - l;
    PalPeriodicity mirrored = nested_crossing_direct(wr, kr, l);
    int dh = mirrored.half_period.d;
    int reflected = 2 * (n + 1) - mirrored.essential_centres.front().d;
    Span sp(n + 1 - mirrored.span.end, n + 1 - mirrored.span.start);
    return certify(w, sp, reflected, dh);
}

PalPeriodicity from_chained_palindromes(const Word& w, const CrossingPair& pair) {
    require_palindrome(w, pair.p1, "P1");
    require_palindrome(w, pair.p2, "P2");
    Span s1 = pair.p1.span(), s2 = pair.p2.span();
    int a = s1.start, b = s1.end, c = s2.start, d = s2.end;
    if (!(a <= c && c <= b && b <= d)) throw std::invalid_argument("spans must interleave");
    if (a == c || b == d) throw std::invalid_argument("one palindrome is a factor of the other");
    if (!(2 * b < c + d || 2 * c > a + b))
        throw std::invalid_argument("each palindrome contains the other's centre");
    return certify(w, Span(a, d), a + b, c + d - a - b);
}

PalPeriodicity from_palindromic_border(const Word& w, int m) {
    int n = w.size();
    if (m < 1 || m >= n) throw std::invalid_argument("border length out of range");
    if (2 * m < n) throw std::invalid_argument("border shorter than half the word");
    for (int i = 1; i <= m; ++i)
        if (w[i] != w[n - m + i]) throw std::invalid_argument("not a border");
    if (!pal_in(w, 1, m)) throw std::invalid_argument("border is not a palindrome");
    if (2 * n >= 3 * m) {
        // u = s t s with s the overlap of the two border copies.
        if (2 * m > n && !pal_in(w, n - m + 1, m))
            throw std::logic_error("border overlap is not a palindrome");
        if (2 * n > 3 * m && !pal_in(w, 2 * m - n + 1, n - m))
            throw std::logic_error("nested complement is not a palindrome");
    } else {
        // The two border copies cross; chain inequality of the crossing theorem.
        if (!(2 * (n - m + 1) <= m + 2)) throw std::logic_error("border copies do not cross");
    }
    int dh = n - m;
    for (int dr = 1; dr <= dh; ++dr)
        if (is_pal_periodicity(w, HalfPos{dr}, HalfPos{dh}))
            return make_pal_periodicity(w, Span(1, n), HalfPos{dr}, HalfPos{dh});
    throw std::logic_error("no certifying offset found");
}

}  // namespace palper
