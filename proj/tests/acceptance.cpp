// Acceptance gate: one pass/fail line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "palper/corpus.hpp"
#include "palper/gword.hpp"
#include "palper/oracle.hpp"
#include "palper/palperiod.hpp"
#include "palper/verify.hpp"

using namespace palper;

namespace {

int g_failures = 0;

void report(const char* name, bool ok, const std::string& note = "") {
    std::printf("%s %s%s%s\n", ok ? "PASS" : "FAIL", name, note.empty() ? "" : " -- ",
                note.c_str());
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int threads() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 4 : static_cast<int>(hw > 8 ? 8 : hw);
}

Word wide_word(const std::string& s) {
    std::map<char, int> seen;
    std::vector<int> v;
    for (char ch : s) {
        auto [it, ins] = seen.insert({ch, static_cast<int>(seen.size())});
        v.push_back(it->second);
    }
    return Word(v, static_cast<int>(seen.size()));
}

// 1. Both reference tables reproduced cell-for-cell in under a second.
void criterion_tables() {
    auto t0 = std::chrono::steady_clock::now();
    auto t1 = build_table(HalfPos::from_int(4), HalfPos::from_int(6), OffsetParity::Same, 16, 6,
                          threads());
    auto t2 = build_table(HalfPos::from_int(4), HalfPos::from_int(6), OffsetParity::Opposite, 18,
                          8, threads());
    bool ok1 = !table_diff(t1, slurp(std::string(TABLES_DIR) + "/table1.tsv")).has_value();
    bool ok2 = !table_diff(t2, slurp(std::string(TABLES_DIR) + "/table2.tsv")).has_value();
    double dt = seconds_since(t0);
    char note[128];
    std::snprintf(note, sizeof note, "table1 %s, table2 %s, %.2fs", ok1 ? "match" : "MISMATCH",
                  ok2 ? "match" : "MISMATCH", dt);
    report("table reproduction", ok1 && ok2 && dt < 1.0, note);
}

// 2. Double-periodicity length bound: at the exact bound the coarsest word has
// period g; with two distinct parameterizations its least period divides g.
void criterion_dpp_bound() {
    auto t0 = std::chrono::steady_clock::now();
    long long cases = 0;
    bool ok = true;
    for (int dh1 = 2; dh1 <= 16 && ok; ++dh1)
        for (int dh2 = 2; dh2 <= 16 && ok; ++dh2)
            for (int dr1 = 0; dr1 < dh1 && ok; ++dr1)
                for (int dr2 = 0; dr2 < dh2 && ok; ++dr2) {
                    int g = std::gcd(std::abs(dr2 - dr1), std::gcd(dh1, dh2));
                    int len = dh1 + dh2 - g;
                    if (len < 1) continue;
                    Word gen = generic_word(
                        {len, {{HalfPos{dr1}, HalfPos{dh1}}, {HalfPos{dr2}, HalfPos{dh2}}}});
                    ++cases;
                    if (!has_period(gen, g)) ok = false;
                    bool distinct = dh1 != dh2 || dr1 != dr2;
                    if (distinct && g % least_period(gen) != 0) ok = false;
                }
    double dt = seconds_since(t0);
    char note[96];
    std::snprintf(note, sizeof note, "%lld cells, %.2fs", cases, dt);
    report("double-periodicity length bound", ok && dt < 60.0, note);
}

// 3. Opposite-parity offsets with half-periods 4 and 6 force period 2 at every
// length from 13 up.
void criterion_threshold() {
    bool ok = true;
    for (int len = 13; len <= 48; ++len)
        for (int r1 = 0; r1 < 4; ++r1)
            for (int r2 = 0; r2 < 6; ++r2) {
                if ((r1 + r2) % 2 == 0) continue;
                GenericSpec spec{len, {{HalfPos::from_int(r1), HalfPos::from_int(4)},
                                       {HalfPos::from_int(r2), HalfPos::from_int(6)}}};
                if (max_least_period(spec) != 2) ok = false;
            }
    report("period-2 threshold at length 13", ok);
}

void criterion_suite(const char* label, const char* suite, int budget, double limit) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyResult res = run_verify_suite(suite, budget, threads());
    double dt = seconds_since(t0);
    char note[256];
    std::snprintf(note, sizeof note, "%lld cases, %.1fs%s%s", res.cases, dt,
                  res.detail.empty() ? "" : ": ", res.detail.c_str());
    report(label, res.ok && dt < limit, note);
}

// 5. The worked embedded-palindrome example behaves exactly as derived.
void criterion_gword_example() {
    bool ok = true;
    auto p = gword_params(HalfPos{13}, HalfPos{49}, HalfPos{60});
    ok = ok && p.g == 12 && p.n == 48 && p.consistent();
    Word w2 = wide_word("abcdeffedcbaabcdeffedcbaabcdeffedcbaabcdeffedcbaabcdeffedcba");
    try {
        PeriodFact f = gword_period(w2, p, 6);
        ok = ok && f.span == Span(1, 60) && f.period == 12 && check(f, w2);
        ok = ok && least_period(w2) == 12;
    } catch (const std::exception&) {
        ok = false;
    }
    Word w3 = wide_word("cdefgbbgfedccdefgbbgfedccdefgaagfedccdefgbbgfedccdefgaagfedc");
    ok = ok && is_palindrome(w3.factor(8, 53)) && has_period(w3, Span(8, 53), 24);
    ok = ok && !has_period(w3, 12);
    bool rejected = false;
    try {
        gword_period(w3, p, 6);
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    report("embedded-palindrome worked example", ok && rejected);
}

// 8. Census output is schedule-independent and counts agree with the naive
// detector on short prefixes.
void criterion_census() {
    auto serialize = [](const std::vector<CensusRecord>& recs) {
        std::ostringstream ss;
        for (const auto& r : recs) {
            ss << r.name << '|' << r.prefix_len << '|' << r.count << '|' << r.max_density_pos;
            for (auto [dh, c] : r.histogram) ss << '|' << dh << ':' << c;
            ss << '\n';
        }
        return ss.str();
    };
    auto t0 = std::chrono::steady_clock::now();
    std::string base = serialize(census("thue-morse", 4096, 256, 1));
    bool deterministic = serialize(census("thue-morse", 4096, 256, 8)) == base;
    bool agree = true;
    for (const auto& rec : census("thue-morse", 64, 8, 2)) {
        Word w = thue_morse(rec.prefix_len);
        if (rec.count != static_cast<int>(find_pps_naive(w).size())) agree = false;
    }
    double dt = seconds_since(t0);
    char note[96];
    std::snprintf(note, sizeof note, "%s, naive %s, %.1fs",
                  deterministic ? "deterministic" : "SCHEDULE-DEPENDENT",
                  agree ? "agrees" : "DISAGREES", dt);
    report("census determinism and counts", deterministic && agree, note);
}

}  // namespace

int main() {
    criterion_tables();
    criterion_dpp_bound();
    criterion_threshold();
    criterion_suite("construction theorem audit", "constructions", 12, 300.0);
    criterion_gword_example();
    criterion_suite("detection equivalence", "detect-oracle", 12, 300.0);
    criterion_suite("periodicity inference rules", "lemmas", 12, 300.0);
    criterion_census();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
