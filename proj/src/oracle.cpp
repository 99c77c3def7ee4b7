#include "palper/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

namespace palper {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[static_cast<size_t>(b)] = a;  // keep the smallest position as root
    }
};

std::vector<int> tsv_cells(const std::string& line) {
    std::vector<int> out;
    std::istringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, '\t'))
        if (!cell.empty()) out.push_back(std::stoi(cell));
    return out;
}

}  // namespace

Word generic_word(const GenericSpec& spec) {
    int n = spec.n;
    if (n < 1) throw std::invalid_argument("length must be positive");
    Dsu dsu(n + 1);  // 1-based
    for (auto [r, h] : spec.constraints) {
        int dr = r.d, dh = h.d;
        if (dh < 1) throw std::invalid_argument("half-period must be at least 1/2");
        // Doubled centres 2c = i + j; both endpoints in [1..n] means 2c in [2..2n].
        int first = 2 + ((dr - 2) % dh + dh) % dh;
        for (int dc = first; dc <= 2 * n; dc += dh)
            for (int i = std::max(1, dc - n); 2 * i < dc; ++i) dsu.unite(i, dc - i);
    }
    std::map<int, int> cls;
    std::vector<int> letters(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int root = dsu.find(i);
        auto [it, inserted] = cls.insert({root, static_cast<int>(cls.size())});
        letters[static_cast<size_t>(i - 1)] = it->second;
    }
    return Word(letters, static_cast<int>(cls.size()));
}

int max_least_period(const GenericSpec& spec) { return least_period(generic_word(spec)); }

PeriodTable build_table(HalfPos h1, HalfPos h2, OffsetParity parity, int len_max, int len_min,
                        int threads) {
    if (!h1.is_integral() || !h2.is_integral())
        throw std::invalid_argument("table half-periods must be integers");
    if (len_max < len_min || len_min < 1) throw std::invalid_argument("bad length range");
    PeriodTable t;
    t.h1 = h1;
    t.h2 = h2;
    for (int len = len_max; len >= len_min; --len) t.lengths.push_back(len);
    int want = parity == OffsetParity::Same ? 0 : 1;
    for (int r1 = 0; r1 < h1.as_int(); ++r1)
        for (int r2 = 0; r2 < h2.as_int(); ++r2)
            if ((r1 + r2) % 2 == want)
                t.rows.push_back({r1, r2, std::vector<int>(t.lengths.size(), 0)});
    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int i = 0; i < static_cast<int>(t.rows.size()); ++i)
        for (int j = 0; j < static_cast<int>(t.lengths.size()); ++j) cells.push_back({i, j});
    auto work = [&](int from, int to) {
        for (int k = from; k < to; ++k) {
            auto [i, j] = cells[static_cast<size_t>(k)];
            auto& row = t.rows[static_cast<size_t>(i)];
            GenericSpec spec{t.lengths[static_cast<size_t>(j)],
                             {{HalfPos::from_int(row.r1), h1}, {HalfPos::from_int(row.r2), h2}}};
            row.periods[static_cast<size_t>(j)] = max_least_period(spec);
        }
    };
    threads = std::max(1, threads);
    if (threads == 1) {
        work(0, static_cast<int>(cells.size()));
    } else {
        std::vector<std::thread> pool;
        int total = static_cast<int>(cells.size());
        int chunk = (total + threads - 1) / threads;
        for (int tix = 0; tix < threads; ++tix) {
            int from = tix * chunk, to = std::min(total, from + chunk);
            if (from < to) pool.emplace_back(work, from, to);
        }
        for (auto& th : pool) th.join();
    }
    return t;
}

std::string table_to_tsv(const PeriodTable& t) {
    std::ostringstream out;
    out << "r1\tr2";
    for (int len : t.lengths) out << "\tlen" << len;
    out << '\n';
    for (const auto& row : t.rows) {
        out << row.r1 << '\t' << row.r2;
        for (int p : row.periods) out << '\t' << p;
        out << '\n';
    }
    return out.str();
}

std::optional<std::string> table_diff(const PeriodTable& t, const std::string& tsv_text) {
    std::istringstream in(tsv_text);
    std::string line;
    std::vector<std::vector<int>> expected;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {  // header
            first = false;
            continue;
        }
        expected.push_back(tsv_cells(line));
    }
    std::ostringstream report;
    if (expected.size() != t.rows.size())
        report << "row count: got " << t.rows.size() << " expected " << expected.size() << '\n';
    for (size_t i = 0; i < std::min(expected.size(), t.rows.size()); ++i) {
        const auto& row = t.rows[i];
        const auto& exp = expected[i];
        if (exp.size() != t.lengths.size() + 2) {
            report << "row " << i << ": malformed expected line\n";
            continue;
        }
        if (exp[0] != row.r1 || exp[1] != row.r2)
            report << "row " << i << ": offsets (" << row.r1 << "," << row.r2 << ") vs ("
                   << exp[0] << "," << exp[1] << ")\n";
        for (size_t j = 0; j < t.lengths.size(); ++j)
            if (row.periods[j] != exp[j + 2])
                report << "r1=" << row.r1 << " r2=" << row.r2 << " len=" << t.lengths[j]
                       << ": got " << row.periods[j] << " expected " << exp[j + 2] << '\n';
    }
    std::string s = report.str();
    if (s.empty()) return std::nullopt;
    return s;
}

HalfPos alphabet_size_of_generic(const GenericSpec& spec) {
    if (spec.constraints.size() != 1) throw std::invalid_argument("need exactly one constraint");
    int dh = spec.constraints[0].second.d;
    if (spec.n < dh) throw std::invalid_argument("need n >= 2h");
    Word w = generic_word(spec);
    std::vector<int> seen;
    for (int i = 1; i <= dh; ++i) seen.push_back(w[i]);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return HalfPos::from_int(static_cast<int>(seen.size()));
}

}  // namespace palper
