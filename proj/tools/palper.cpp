// palper: palindromic-periodicity toolkit CLI. Talks to the core only
// through the C API in palper.h.
#include <algorithm>
#include <climits>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "palper.h"

namespace {

int worker_threads() {
    if (const char* env = std::getenv("PALPER_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

// Accepts "13/2", "6.5", "13" (integer positions), or with --…2 flags the
// doubled integer directly.
bool parse_doubled(const std::string& text, int& out) {
    try {
        if (auto slash = text.find('/'); slash != std::string::npos) {
            int num = std::stoi(text.substr(0, slash));
            int den = std::stoi(text.substr(slash + 1));
            if (den == 1) {
                out = 2 * num;
                return true;
            }
            if (den != 2) return false;
            out = num;
            return true;
        }
        if (auto dot = text.find('.'); dot != std::string::npos) {
            std::string frac = text.substr(dot + 1);
            int whole = std::stoi(text.substr(0, dot));
            if (frac == "0") {
                out = 2 * whole;
                return true;
            }
            if (frac != "5") return false;
            out = 2 * whole + (text[0] == '-' ? -1 : 1);
            return true;
        }
        out = 2 * std::stoi(text);
        return true;
    } catch (...) {
        return false;
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string s = ss.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

int fail(palper_status st) {
    std::cerr << "error: " << palper_last_error() << "\n";
    return st == PALPER_ERR_PARSE ? 2 : 1;
}

struct WordHandle {
    palper_word* w = nullptr;
    ~WordHandle() { palper_word_free(w); }
};

struct StringOut {
    char* s = nullptr;
    ~StringOut() { palper_string_free(s); }
};

int load_word(const std::string& text, const std::string& file, WordHandle& wh) {
    std::string input = text;
    if (!file.empty()) {
        try {
            input = slurp(file);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }
    if (auto st = palper_word_parse(input.c_str(), &wh.w); st != PALPER_OK) return fail(st);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"palindromic periodicity toolkit"};
    app.require_subcommand(1);
    int threads = worker_threads();

    std::string word_text, word_file;
    auto add_word_opts = [&](CLI::App* cmd) {
        cmd->add_option("--word", word_text, "word, as letters or i:<alpha>,<letters…>");
        cmd->add_option("--file", word_file, "read the word from a file");
    };

    auto* detect = app.add_subcommand("detect", "maximal palindromic periodicities");
    add_word_opts(detect);
    auto* params = app.add_subcommand("params", "all (offset, half-period) parameterizations");
    add_word_opts(params);

    std::string theorem, args_json = "{}";
    auto* construct = app.add_subcommand("construct", "apply a construction theorem");
    construct->add_option("--theorem", theorem,
                          "periodic-palindrome | reverse-prefixes | crossing | nested-crossing | "
                          "chained | palindromic-border")
        ->required();
    construct->add_option("--args", args_json, "hypothesis data as JSON")->required();

    std::string r_text, c_text, h_text;
    int r2 = INT_MIN, c2 = INT_MIN, h2 = INT_MIN;
    auto* gword = app.add_subcommand("gword", "analyze g-word parameters");
    // the default -h short help flag collides with the --h option below
    gword->set_help_flag("--help", "print help");
    gword->add_option("--r", r_text, "offset r (fraction ok)");
    gword->add_option("--c", c_text, "palindrome centre c (fraction ok)");
    gword->add_option("--h", h_text, "half-period h (fraction ok)");
    gword->add_option("--r2", r2, "doubled offset");
    gword->add_option("--c2", c2, "doubled centre");
    gword->add_option("--h2", h2, "doubled half-period");

    int h1 = 4, h2t = 6, len_max = 16, len_min = 6;
    std::string parity = "same", lengths = "", diff_path;
    bool tsv = false;
    auto* table = app.add_subcommand("table", "double-periodicity period table");
    table->add_option("--h1", h1, "first half-period");
    table->add_option("--h2", h2t, "second half-period");
    table->add_option("--parity", parity, "same | opposite");
    table->add_option("--lengths", lengths, "MAX:MIN length range");
    table->add_flag("--tsv", tsv, "TSV output instead of JSON");
    table->add_option("--diff", diff_path, "compare against a TSV file; nonzero exit on mismatch");

    std::string famous = "kolakoski";
    int census_n = 1024, stride = 256;
    auto* census = app.add_subcommand("census", "scan a famous word");
    census->add_option("--famous", famous, "thue-morse | fibonacci | kolakoski");
    census->add_option("--n", census_n, "prefix length");
    census->add_option("--stride", stride, "schedule stride");

    std::string suite = "all";
    int budget = 0;
    auto* verify = app.add_subcommand("verify", "run exhaustive property suites");
    verify->add_option("--suite", suite,
                       "all | detect-oracle | lemmas | constructions | gword | dpp | universality");
    verify->add_option("--budget", budget, "size budget (0 = suite default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (detect->parsed() || params->parsed()) {
        WordHandle wh;
        if (int rc = load_word(word_text, word_file, wh); rc != 0) return rc;
        StringOut out;
        auto st = detect->parsed() ? palper_detect(wh.w, &out.s) : palper_params(wh.w, &out.s);
        if (st != PALPER_OK) return fail(st);
        std::cout << out.s;
        return 0;
    }
    if (construct->parsed()) {
        StringOut out;
        if (auto st = palper_construct(theorem.c_str(), args_json.c_str(), &out.s);
            st != PALPER_OK)
            return fail(st);
        std::cout << out.s << "\n";
        return 0;
    }
    if (gword->parsed()) {
        auto pick = [&](const std::string& text, int doubled, const char* what, int& out) {
            if (doubled != INT_MIN) {
                out = doubled;
                return true;
            }
            if (!text.empty() && parse_doubled(text, out)) return true;
            std::cerr << "error: missing or malformed --" << what << "\n";
            return false;
        };
        int dr, dc, dh;
        if (!pick(r_text, r2, "r", dr) || !pick(c_text, c2, "c", dc) || !pick(h_text, h2, "h", dh))
            return 2;
        StringOut out;
        if (auto st = palper_gword(dr, dc, dh, &out.s); st != PALPER_OK) return fail(st);
        std::cout << out.s << "\n";
        return 0;
    }
    if (table->parsed()) {
        if (!lengths.empty()) {
            auto colon = lengths.find(':');
            if (colon == std::string::npos) {
                std::cerr << "error: --lengths wants MAX:MIN\n";
                return 2;
            }
            try {
                len_max = std::stoi(lengths.substr(0, colon));
                len_min = std::stoi(lengths.substr(colon + 1));
            } catch (...) {
                std::cerr << "error: --lengths wants MAX:MIN\n";
                return 2;
            }
        }
        if (parity != "same" && parity != "opposite") {
            std::cerr << "error: --parity wants same or opposite\n";
            return 2;
        }
        int same = parity == "same" ? 1 : 0;
        if (!diff_path.empty()) {
            std::string expected;
            try {
                expected = slurp(diff_path) + "\n";
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
            StringOut report;
            auto st = palper_table_diff(h1, h2t, same, len_max, len_min, threads,
                                        expected.c_str(), &report.s);
            if (st == PALPER_OK) {
                std::cout << "match\n";
                return 0;
            }
            if (report.s && *report.s) std::cerr << report.s;
            else std::cerr << "error: " << palper_last_error() << "\n";
            return 1;
        }
        StringOut out;
        if (auto st = palper_table(h1, h2t, same, len_max, len_min, threads, tsv ? 1 : 0, &out.s);
            st != PALPER_OK)
            return fail(st);
        std::cout << out.s;
        if (!tsv) std::cout << "\n";
        return 0;
    }
    if (census->parsed()) {
        StringOut out;
        if (auto st = palper_census(famous.c_str(), census_n, stride, threads, &out.s);
            st != PALPER_OK)
            return fail(st);
        std::cout << out.s;
        return 0;
    }
    if (verify->parsed()) {
        StringOut out;
        if (auto st = palper_verify(suite.c_str(), budget, threads, &out.s); st != PALPER_OK)
            return fail(st);
        std::cout << out.s << "\n";
        // exit 1 when any suite failed
        return std::string(out.s).find("\"ok\":false") == std::string::npos ? 0 : 1;
    }
    return 2;
}
