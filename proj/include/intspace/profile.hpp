#pragma once

#include <string>
#include <utility>
#include <vector>

namespace intspace {

struct Dataset {
    std::vector<double> values;
    std::string source_name;
};

// One numeric column from a CSV file, selected by zero-based index.  A header
// row is auto-detected: if the first row's target cell does not parse as a
// number it is skipped.  Any later row that fails to parse, lacks the column,
// or holds a non-finite value raises io_error naming the line.
Dataset load_csv(const std::string& path, std::size_t column);

// Same, selecting the column by header name (the header row is mandatory).
Dataset load_csv(const std::string& path, const std::string& column_name);

struct SpacingProfile {
    std::vector<long> widths;
    // rows[k] holds (i, D_{i,w}) for widths[k], i = w+1..n.
    std::vector<std::vector<std::pair<long, double>>> rows;
};

// Sorts the dataset ascending and computes the interval-spacing profile for
// every requested width.
SpacingProfile compute_profile(const Dataset& data, const std::vector<long>& widths);

// Synthetic stand-in for a clustered depth catalogue: two clusters of 100
// points in steps of 0.01 separated by a gap of 0.15, so the widest spacing
// sits at a known index.
Dataset planted_gap_fixture();

}  // namespace intspace
