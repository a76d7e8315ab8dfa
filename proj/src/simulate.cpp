#include "intspace/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "intspace/errors.hpp"

namespace intspace {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

}  // namespace

std::uint64_t RandomStream::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

double RandomStream::next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
}

RandomStream replicate_stream(std::uint64_t seed, std::uint64_t replicate) {
    return RandomStream(mix64(seed + kGolden * (replicate + 1)));
}

void SimulationConfig::validate() const {
    intspace::validate(model);
    if (n < 2) throw domain_error("simulation: n must be at least 2");
    if (reps < 2) throw domain_error("simulation: reps must be at least 2");
    if (widths.empty()) throw domain_error("simulation: widths must not be empty");
    for (long w : widths)
        if (w < 1 || w >= n)
            throw domain_error("simulation: each width must satisfy 1 <= w < n");
}

std::vector<double> sample_sorted(const VariateModel& model, long n, RandomStream& stream) {
    if (n < 1) throw domain_error("sample_sorted: n must be positive");
    std::vector<double> x(static_cast<std::size_t>(n));
    for (double& v : x) v = quantile(model, stream.next_unit());
    std::sort(x.begin(), x.end());
    return x;
}

SpacingSeries interval_spacings(const std::vector<double>& sorted, long w) {
    const long n = static_cast<long>(sorted.size());
    if (w < 1 || w >= n) throw domain_error("interval_spacings: need 1 <= w < n");
    for (std::size_t k = 1; k < sorted.size(); ++k)
        if (sorted[k] < sorted[k - 1])
            throw domain_error("interval_spacings: input must be ascending");
    SpacingSeries out;
    out.n = n;
    out.w = w;
    out.values.resize(static_cast<std::size_t>(n - w));
    for (long k = 0; k + w < n; ++k)
        out.values[static_cast<std::size_t>(k)] = sorted[static_cast<std::size_t>(k + w)] -
                                                  sorted[static_cast<std::size_t>(k)];
    return out;
}

DecompositionReport decomposition_check(const std::vector<double>& sorted, long w,
                                        double rel_tol) {
    const long n = static_cast<long>(sorted.size());
    if (w < 1 || w >= n) throw domain_error("decomposition_check: need 1 <= w < n");
    if (!(rel_tol > 0.0)) throw domain_error("decomposition_check: rel_tol must be positive");
    for (std::size_t k = 1; k < sorted.size(); ++k)
        if (sorted[k] < sorted[k - 1])
            throw domain_error("decomposition_check: input must be ascending");

    auto at = [&](long idx) { return sorted[static_cast<std::size_t>(idx - 1)]; };  // 1-based
    auto single = [&](long idx) { return at(idx) - at(idx - 1); };                  // D_{idx,1}
    double max_dev = 0.0;
    for (long i = w + 1; i <= n; ++i) {
        const double d = at(i) - at(i - w);

        double sum = 0.0;
        for (long k = 0; k < w; ++k) sum += single(i - k);
        max_dev = std::max(max_dev, std::abs(d - sum));

        if (w % 2 == 0) {
            const long h = w / 2;
            const double halves = (at(i) - at(i - h)) + (at(i - h) - at(i - w));
            max_dev = std::max(max_dev, std::abs(d - halves));
        }

        const long max_shift = std::min(w + 5, i - w - 1);
        for (long l = 1; l <= max_shift; ++l) {
            const double lhs = d - (at(i - l) - at(i - l - w));
            double rhs = 0.0;
            for (long k = 0; k < l; ++k) rhs += single(i - k);
            for (long k = w; k < w + l; ++k) rhs -= single(i - k);
            max_dev = std::max(max_dev, std::abs(lhs - rhs));
        }
    }

    double scale = sorted.back() - sorted.front();
    if (!(scale > 0.0)) scale = 1.0;
    return DecompositionReport{max_dev <= rel_tol * scale, max_dev, scale};
}

double quantile_type7(const std::vector<double>& sorted_values, double p) {
    if (sorted_values.empty()) throw domain_error("quantile_type7: empty input");
    if (!(p >= 0.0 && p <= 1.0)) throw domain_error("quantile_type7: p must lie in [0, 1]");
    const std::size_t r = sorted_values.size();
    const double h = static_cast<double>(r - 1) * p;
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= r) return sorted_values[r - 1];
    const double frac = h - static_cast<double>(lo);
    return sorted_values[lo] + frac * (sorted_values[lo + 1] - sorted_values[lo]);
}

std::vector<SummaryCell> run_simulation(const SimulationConfig& cfg,
                                        const std::vector<long>& indices) {
    cfg.validate();
    for (long i : indices)
        if (i < 1 || i > cfg.n)
            throw domain_error("run_simulation: each index must satisfy 1 <= i <= n");

    struct Key {
        long w;
        long i;
    };
    std::vector<Key> keys;
    for (long w : cfg.widths) {
        if (indices.empty()) {
            for (long i = w + 1; i <= cfg.n; ++i) keys.push_back(Key{w, i});
        } else {
            for (long i : indices)
                if (i > w) keys.push_back(Key{w, i});
        }
    }

    std::vector<std::vector<double>> cells(keys.size());
    for (auto& c : cells) c.reserve(static_cast<std::size_t>(cfg.reps));
    for (long r = 0; r < cfg.reps; ++r) {
        RandomStream stream = replicate_stream(cfg.seed, static_cast<std::uint64_t>(r));
        const std::vector<double> x = sample_sorted(cfg.model, cfg.n, stream);
        for (std::size_t k = 0; k < keys.size(); ++k)
            cells[k].push_back(x[static_cast<std::size_t>(keys[k].i - 1)] -
                               x[static_cast<std::size_t>(keys[k].i - 1 - keys[k].w)]);
    }

    std::vector<SummaryCell> out(keys.size());
    for (std::size_t k = 0; k < keys.size(); ++k) {
        SummaryCell& cell = out[k];
        cell.i = keys[k].i;
        cell.w = keys[k].w;
        const std::vector<double>& v = cells[k];
        const double r = static_cast<double>(v.size());
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= r;
        double ss = 0.0;
        for (double x : v) ss += (x - mean) * (x - mean);
        cell.mean = mean;
        cell.variance = ss / (r - 1.0);

        std::vector<double> s = v;
        std::sort(s.begin(), s.end());
        cell.q25 = quantile_type7(s, 0.25);
        cell.median = quantile_type7(s, 0.5);
        cell.q75 = quantile_type7(s, 0.75);

        cell.hist_max = s.back();
        cell.histogram.assign(kHistogramBins, 0);
        for (double x : v) {
            int bin = 0;
            if (cell.hist_max > 0.0)
                bin = std::min(kHistogramBins - 1,
                               static_cast<int>(x / cell.hist_max * kHistogramBins));
            ++cell.histogram[static_cast<std::size_t>(bin)];
        }
    }
    return out;
}

}  // namespace intspace
