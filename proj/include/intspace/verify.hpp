#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace intspace {

struct CheckRow {
    std::string check;
    long cases = 0;
    double max_abs_err = 0.0;
    bool pass = false;
};

struct VerifyOptions {
    long max_n = 40;
    long max_w = 8;
    std::uint64_t seed = 42;
    // Negative control: flips the sign of the first identity so a healthy
    // build reports the failure path end to end.
    bool canary = false;
};

// The identity suites behind `intspace verify`: exponential series vs sum
// (exact), logistic series vs sum (exact), w = 1 reductions, density
// normalization, and closed forms against the generic quadrature.
std::vector<CheckRow> run_verification(const VerifyOptions& opts);

}  // namespace intspace
