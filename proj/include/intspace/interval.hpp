#pragma once

namespace intspace {

// Indices are 1-based: D_{i,w} = T_i - T_{i-w} with 1 <= w < i <= n.
struct IntervalSpec {
    long n = 0;
    long i = 0;
    long w = 0;
};

void validate(const IntervalSpec& s);  // throws domain_error naming the constraint
bool is_valid(const IntervalSpec& s);

}  // namespace intspace
