#pragma once

#include <optional>
#include <string>
#include <vector>

#include "palper/word.hpp"

namespace palper {

// Reflection-lattice constraint system: each (r, h) imposes i ~ 2c - i for
// every lattice centre c = r + k*h, k any integer.
struct GenericSpec {
    int n = 1;
    std::vector<std::pair<HalfPos, HalfPos>> constraints;  // (offset r, half-period h)
};

// The coarsest word satisfying all constraints: positions are identified under
// the closure of the reflections, classes numbered by smallest member.
Word generic_word(const GenericSpec& spec);

// least_period of the generic word = maximum least period over all satisfying
// words (any satisfying word is a letter-identification of the generic one).
int max_least_period(const GenericSpec& spec);

enum class OffsetParity { Same, Opposite };

struct PeriodTable {
    HalfPos h1, h2;
    std::vector<int> lengths;  // descending
    struct Row {
        int r1 = 0, r2 = 0;
        std::vector<int> periods;  // indexed like lengths
    };
    std::vector<Row> rows;
};

// Rows enumerate integer offsets r1 in [0, h1), r2 in [0, h2) filtered by the
// parity rule; cells are max_least_period at each length.
PeriodTable build_table(HalfPos h1, HalfPos h2, OffsetParity parity, int len_max, int len_min,
                        int threads = 1);

std::string table_to_tsv(const PeriodTable& t);

// Cell-for-cell comparison against a TSV rendering; nullopt on exact match,
// otherwise a mismatch report.
std::optional<std::string> table_diff(const PeriodTable& t, const std::string& tsv_text);

// Distinct classes over one full period of a single-constraint generic word
// (n >= 2h required): h, h + 1/2 or h + 1 depending on centre parities.
HalfPos alphabet_size_of_generic(const GenericSpec& spec);

}  // namespace palper
