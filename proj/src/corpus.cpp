#include "palper/corpus.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "palper/palperiod.hpp"

namespace palper {

namespace {

constexpr int kGeneratorBudget = 1 << 22;

void check_budget(int n) {
    if (n < 0) throw std::invalid_argument("length must be non-negative");
    if (n > kGeneratorBudget) throw std::invalid_argument("length exceeds generator budget");
}

}  // namespace

Word thue_morse(int n) {
    check_budget(n);
    std::vector<int> v{0};
    while (static_cast<int>(v.size()) < n) {
        size_t sz = v.size();
        for (size_t i = 0; i < sz && static_cast<int>(v.size()) < n; ++i)
            v.push_back(1 - v[i]);
    }
    v.resize(static_cast<size_t>(n));
    return Word(v, 2);
}

Word fibonacci_word(int n) {
    check_budget(n);
    std::vector<int> v{0};  // a=0, b=1
    while (static_cast<int>(v.size()) < n) {
        // One morphism pass: a -> ab, b -> a.
        std::vector<int> next;
        next.reserve(v.size() * 2);
        for (int x : v) {
            next.push_back(0);
            if (x == 0) next.push_back(1);
        }
        v = std::move(next);
    }
    v.resize(static_cast<size_t>(std::max(n, 0)));
    return Word(v, 2);
}

Word kolakoski(int n) {
    check_budget(n);
    if (n == 0) return Word({}, 3);
    std::vector<int> v{1, 2, 2};
    size_t read = 2;  // v[read] is the length of the next run (0-based)
    int sym = 1;      // runs alternate 1, 2, 1, ... ; run 3 is a 1-run
    while (static_cast<int>(v.size()) < n) {
        int len = v[read++];
        for (int t = 0; t < len; ++t) v.push_back(sym);
        sym = 3 - sym;
    }
    v.resize(static_cast<size_t>(n));
    return Word(v, 3);
}

Word famous_word(const std::string& name, int n) {
    if (name == "thue-morse") return thue_morse(n);
    if (name == "fibonacci") return fibonacci_word(n);
    if (name == "kolakoski") return kolakoski(n);
    throw std::invalid_argument("unknown word name: " + name);
}

std::vector<CensusRecord> census(const std::string& name, int n, int stride, int threads) {
    if (stride < 1 || n < stride) throw std::invalid_argument("bad stride schedule");
    Word full = famous_word(name, n);
    std::vector<int> lens;
    for (int len = stride; len <= n; len += stride) lens.push_back(len);
    std::vector<CensusRecord> out(lens.size());
    auto work = [&](int from, int to) {
        for (int k = from; k < to; ++k) {
            int len = lens[static_cast<size_t>(k)];
            CensusRecord rec;
            rec.name = name;
            rec.prefix_len = len;
            auto occs = find_maximal_pps(full.factor(1, len));
            rec.count = static_cast<int>(occs.size());
            std::vector<int> density(static_cast<size_t>(len) + 2, 0);
            for (const auto& o : occs) {
                ++rec.histogram[o.half_period.d];
                ++density[static_cast<size_t>(o.span.start)];
                --density[static_cast<size_t>(o.span.end) + 1];
            }
            int best = -1, run = 0;
            for (int pos = 1; pos <= len; ++pos) {
                run += density[static_cast<size_t>(pos)];
                if (run > best) {
                    best = run;
                    rec.max_density_pos = pos;
                }
            }
            out[static_cast<size_t>(k)] = std::move(rec);
        }
    };
    threads = std::max(1, threads);
    int total = static_cast<int>(lens.size());
    if (threads == 1 || total <= 1) {
        work(0, total);
    } else {
        std::vector<std::thread> pool;
        int chunk = (total + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            int from = t * chunk, to = std::min(total, from + chunk);
            if (from < to) pool.emplace_back(work, from, to);
        }
        for (auto& th : pool) th.join();
    }
    return out;
}

}  // namespace palper
