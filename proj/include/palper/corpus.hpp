#pragma once

#include <map>
#include <string>
#include <vector>

#include "palper/word.hpp"

namespace palper {

// First n letters of the fixed point of 0 -> 01, 1 -> 10.
Word thue_morse(int n);
// First n letters of the fixed point of a -> ab, b -> a.
Word fibonacci_word(int n);
// First n letters of the self-run-length-encoding word over {1,2}: 1,2,2,...
Word kolakoski(int n);

// Dispatch by name: "thue-morse", "fibonacci", "kolakoski".
Word famous_word(const std::string& name, int n);

struct CensusRecord {
    std::string name;
    int prefix_len = 0;
    int count = 0;                 // maximal palindromic periodicities
    std::map<int, int> histogram;  // doubled half-period -> count
    int max_density_pos = 0;       // smallest position covered by the most occurrences
};

// Runs detection on each prefix length stride, 2*stride, ... <= n.
// Deterministic for any thread count.
std::vector<CensusRecord> census(const std::string& name, int n, int stride, int threads = 1);

}  // namespace palper
