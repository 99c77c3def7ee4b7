#pragma once

#include <string>
#include <vector>

namespace palper {

struct VerifyResult {
    std::string suite;
    bool ok = false;
    long long cases = 0;   // instances checked
    std::string detail;    // first failure, or empty
};

// Known suites: detect-oracle, lemmas, constructions, gword, dpp, universality.
std::vector<std::string> verify_suites();

// budget <= 0 selects each suite's default size.
VerifyResult run_verify_suite(const std::string& name, int budget = 0, int threads = 1);

}  // namespace palper
