#include "intspace/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "intspace/errors.hpp"
#include "intspace/simulate.hpp"

namespace intspace {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

bool try_parse(const std::string& cell, double& out) {
    if (cell.empty()) return false;
    const char* begin = cell.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    return end == begin + cell.size();
}

Dataset load_rows(const std::string& path, std::size_t column, bool skip_first) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    Dataset data;
    data.source_name = path;
    std::string line;
    long line_no = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const std::vector<std::string> cells = split_row(line);
        if (first) {
            first = false;
            double probe = 0.0;
            const bool header = skip_first ||
                                column >= cells.size() || !try_parse(cells[column], probe);
            if (header) continue;
        }
        if (column >= cells.size())
            throw io_error(path + ": line " + std::to_string(line_no) + ": column " +
                           std::to_string(column) + " missing");
        double value = 0.0;
        if (!try_parse(cells[column], value))
            throw io_error(path + ": line " + std::to_string(line_no) + ": cannot parse '" +
                           cells[column] + "'");
        if (!std::isfinite(value))
            throw io_error(path + ": line " + std::to_string(line_no) + ": non-finite value");
        data.values.push_back(value);
    }
    if (data.values.empty()) throw io_error(path + ": no data rows in column");
    return data;
}

}  // namespace

Dataset load_csv(const std::string& path, std::size_t column) {
    return load_rows(path, column, false);
}

Dataset load_csv(const std::string& path, const std::string& column_name) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!trim(line).empty()) break;
        line = "";
    }
    if (trim(line).empty()) throw io_error(path + ": empty file");
    const std::vector<std::string> header = split_row(line);
    for (std::size_t c = 0; c < header.size(); ++c)
        if (header[c] == column_name) return load_rows(path, c, true);
    throw io_error(path + ": column '" + column_name + "' not found in header");
}

SpacingProfile compute_profile(const Dataset& data, const std::vector<long>& widths) {
    if (widths.empty()) throw domain_error("compute_profile: widths must not be empty");
    const long n = static_cast<long>(data.values.size());
    for (double v : data.values)
        if (!std::isfinite(v)) throw domain_error("compute_profile: values must be finite");
    for (long w : widths) {
        if (w < 1) throw domain_error("compute_profile: widths must be positive");
        if (w >= n) throw domain_error("compute_profile: width must be smaller than the sample");
    }
    std::vector<double> sorted = data.values;
    std::sort(sorted.begin(), sorted.end());

    SpacingProfile profile;
    profile.widths = widths;
    profile.rows.resize(widths.size());
    for (std::size_t k = 0; k < widths.size(); ++k) {
        const SpacingSeries series = interval_spacings(sorted, widths[k]);
        profile.rows[k].reserve(series.values.size());
        for (std::size_t j = 0; j < series.values.size(); ++j)
            profile.rows[k].emplace_back(static_cast<long>(j) + widths[k] + 1, series.values[j]);
    }
    return profile;
}

Dataset planted_gap_fixture() {
    Dataset data;
    data.source_name = "planted-gap";
    data.values.reserve(200);
    for (int k = 0; k < 100; ++k) data.values.push_back(0.01 * k);
    for (int k = 0; k < 100; ++k) data.values.push_back(1.14 + 0.01 * k);
    return data;
}

}  // namespace intspace
