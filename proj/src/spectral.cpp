#include "intspace/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "intspace/closedform.hpp"
#include "intspace/errors.hpp"
#include "intspace/interval.hpp"

namespace intspace {

namespace {

constexpr double kRetainSpacingFrac = 1e-3;
constexpr double kRetainKernelFrac = 1e-6;  // times w
constexpr double kLobeThresholdFrac = 0.05;
constexpr double kPi = 3.141592653589793238462643383279502884;

bool is_pow2(long n) { return n > 0 && (n & (n - 1)) == 0; }

std::vector<double> magnitudes(const std::vector<double>& signal, long N) {
    std::vector<std::complex<double>> buf(static_cast<std::size_t>(N));
    for (std::size_t k = 0; k < signal.size(); ++k) buf[k] = signal[k];
    fft(buf);
    std::vector<double> mag(buf.size());
    for (std::size_t k = 0; k < buf.size(); ++k) mag[k] = std::abs(buf[k]);
    return mag;
}

}  // namespace

void fft(std::vector<std::complex<double>>& data) {
    const std::size_t n = data.size();
    if (!is_pow2(static_cast<long>(n))) throw domain_error("fft: size must be a power of two");
    for (std::size_t k = 1, j = 0; k < n; ++k) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (k < j) std::swap(data[k], data[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * kPi / static_cast<double>(len);
        for (std::size_t start = 0; start < n; start += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                const std::complex<double> tw = std::polar(1.0, ang * static_cast<double>(j));
                const std::complex<double> u = data[start + j];
                const std::complex<double> v = data[start + j + len / 2] * tw;
                data[start + j] = u + v;
                data[start + j + len / 2] = u - v;
            }
        }
    }
}

std::vector<double> kernel_response(long w, long N) {
    if (w < 1 || w > N) throw domain_error("kernel_response: need 1 <= w <= N");
    if (!is_pow2(N)) throw domain_error("kernel_response: N must be a power of two");
    std::vector<double> kernel(static_cast<std::size_t>(w), 1.0);
    return magnitudes(kernel, N);
}

double dirichlet_magnitude(long w, long N, long k) {
    if (w < 1 || w > N) throw domain_error("dirichlet_magnitude: need 1 <= w <= N");
    if (k < 0 || k >= N) throw domain_error("dirichlet_magnitude: bin out of range");
    const double den = std::sin(kPi * static_cast<double>(k) / static_cast<double>(N));
    if (den == 0.0) return static_cast<double>(w);
    const double num = std::sin(kPi * static_cast<double>(k * w) / static_cast<double>(N));
    return std::abs(num / den);
}

FilterCheck filter_equivalence(const std::vector<double>& sorted, long w, long N) {
    const long n = static_cast<long>(sorted.size());
    if (w < 1) throw domain_error("filter_equivalence: w must be positive");
    if (n < w + 2) throw domain_error("filter_equivalence: need at least w + 2 values");
    if (!is_pow2(N) || N < n + w - 2)
        throw domain_error("filter_equivalence: N must be a power of two >= n + w - 2");
    for (std::size_t k = 1; k < sorted.size(); ++k)
        if (sorted[k] < sorted[k - 1])
            throw domain_error("filter_equivalence: input must be ascending");

    std::vector<double> spacings(static_cast<std::size_t>(n - 1));
    for (long k = 0; k + 1 < n; ++k)
        spacings[static_cast<std::size_t>(k)] =
            sorted[static_cast<std::size_t>(k + 1)] - sorted[static_cast<std::size_t>(k)];

    // Valid-region identity: each D_{i,w} is the sum of its w single spacings.
    double conv_dev = 0.0;
    double conv_scale = 0.0;
    for (long j = 0; j + w < n; ++j) {
        const double d = sorted[static_cast<std::size_t>(j + w)] - sorted[static_cast<std::size_t>(j)];
        double sum = 0.0;
        for (long k = 0; k < w; ++k) sum += spacings[static_cast<std::size_t>(j + k)];
        conv_dev = std::max(conv_dev, std::abs(d - sum));
        conv_scale = std::max(conv_scale, std::abs(d));
    }
    if (!(conv_scale > 0.0)) conv_scale = 1.0;

    // Boundary-extended interval sequence: entry m is the clamped partial sum
    // sorted[min(m+1, n-1)] - sorted[max(m+1-w, 0)], which equals the full
    // convolution of the spacing sequence with the w-ones kernel.
    std::vector<double> extended(static_cast<std::size_t>(n + w - 2));
    for (long m = 0; m < n + w - 2; ++m)
        extended[static_cast<std::size_t>(m)] =
            sorted[static_cast<std::size_t>(std::min(m + 1, n - 1))] -
            sorted[static_cast<std::size_t>(std::max(m + 1 - w, static_cast<long>(0)))];

    FilterCheck out;
    out.conv_max_rel_dev = conv_dev / conv_scale;
    out.report.spacing_spectrum = magnitudes(spacings, N);
    out.report.interval_spectrum = magnitudes(extended, N);
    out.report.kernel_response = kernel_response(w, N);
    out.report.freq_bins.resize(static_cast<std::size_t>(N));
    out.report.ratio.resize(static_cast<std::size_t>(N));
    out.retained.assign(static_cast<std::size_t>(N), 0);

    const double max_spacing_mag =
        *std::max_element(out.report.spacing_spectrum.begin(), out.report.spacing_spectrum.end());
    for (long k = 0; k < N; ++k) {
        const std::size_t idx = static_cast<std::size_t>(k);
        out.report.freq_bins[idx] = static_cast<double>(k) / static_cast<double>(N);
        const double s = out.report.spacing_spectrum[idx];
        out.report.ratio[idx] = s > 0.0 ? out.report.interval_spectrum[idx] / s : 0.0;
        const bool keep = s > kRetainSpacingFrac * max_spacing_mag &&
                          out.report.kernel_response[idx] >
                              kRetainKernelFrac * static_cast<double>(w);
        out.retained[idx] = keep ? 1 : 0;
        if (keep) {
            const double rel = std::abs(out.report.ratio[idx] - out.report.kernel_response[idx]) /
                               out.report.kernel_response[idx];
            out.ratio_max_rel_dev = std::max(out.ratio_max_rel_dev, rel);
        }
    }
    return out;
}

LobeCount count_lobes(const std::vector<double>& magnitudes) {
    const long N = static_cast<long>(magnitudes.size());
    if (N < 4) throw domain_error("count_lobes: curve too short");
    double peak = 0.0;
    for (long k = 1; k <= N / 2; ++k)
        peak = std::max(peak, magnitudes[static_cast<std::size_t>(k)]);
    const double th = kLobeThresholdFrac * peak;
    LobeCount out;
    bool above = magnitudes[1] > th;
    for (long k = 2; k <= N / 2; ++k) {
        const bool now = magnitudes[static_cast<std::size_t>(k)] > th;
        if (above && !now) ++out.zeros;
        if (!above && now) ++out.side_lobes;
        above = now;
    }
    return out;
}

AutocovReport autocovariance(const SimulationConfig& cfg, long i, long w, long max_lag) {
    SimulationConfig local = cfg;
    local.widths = {w};
    local.validate();
    if (max_lag < 0) throw domain_error("autocovariance: max_lag must be nonnegative");
    if (max_lag > w + 5) throw domain_error("autocovariance: max_lag must not exceed w + 5");
    if (i > local.n) throw domain_error("autocovariance: i must not exceed n");
    if (i - max_lag - w < 1)
        throw domain_error("autocovariance: need i - max_lag - w >= 1");

    const std::size_t reps = static_cast<std::size_t>(local.reps);
    const std::size_t lags = static_cast<std::size_t>(max_lag + 1);
    std::vector<std::vector<double>> series(lags);
    for (auto& s : series) s.reserve(reps);
    for (long r = 0; r < local.reps; ++r) {
        RandomStream stream = replicate_stream(local.seed, static_cast<std::uint64_t>(r));
        const std::vector<double> x = sample_sorted(local.model, local.n, stream);
        for (long l = 0; l <= max_lag; ++l)
            series[static_cast<std::size_t>(l)].push_back(
                x[static_cast<std::size_t>(i - l - 1)] -
                x[static_cast<std::size_t>(i - l - w - 1)]);
    }

    std::vector<double> means(lags, 0.0);
    for (std::size_t l = 0; l < lags; ++l) {
        for (double v : series[l]) means[l] += v;
        means[l] /= static_cast<double>(reps);
    }

    AutocovReport out;
    out.lags.resize(lags);
    out.empirical_cov.resize(lags);
    out.se.resize(lags);
    out.predicted.resize(lags);
    for (std::size_t l = 0; l < lags; ++l) {
        out.lags[l] = static_cast<long>(l);
        std::vector<double> products(reps);
        for (std::size_t r = 0; r < reps; ++r)
            products[r] = (series[0][r] - means[0]) * (series[l][r] - means[l]);
        double cov = 0.0;
        for (double p : products) cov += p;
        cov /= static_cast<double>(reps) - 1.0;
        double pmean = 0.0;
        for (double p : products) pmean += p;
        pmean /= static_cast<double>(reps);
        double pvar = 0.0;
        for (double p : products) pvar += (p - pmean) * (p - pmean);
        pvar /= static_cast<double>(reps) - 1.0;
        out.empirical_cov[l] = cov;
        out.se[l] = std::sqrt(pvar / static_cast<double>(reps));
    }

    IntervalSpec spec{local.n, i, w};
    const std::optional<double> closed_var = closedform::variance(local.model, spec);
    const double v = closed_var ? *closed_var : out.empirical_cov[0];
    for (std::size_t l = 0; l < lags; ++l) {
        const double frac = 1.0 - static_cast<double>(l) / static_cast<double>(w);
        out.predicted[l] = v * std::max(0.0, frac);
    }
    return out;
}

}  // namespace intspace
