#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "intspace/simulate.hpp"

namespace intspace {

// In-place radix-2 FFT; size must be a power of two.
void fft(std::vector<std::complex<double>>& data);

// Magnitude of the N-point DFT of a kernel of w ones, zero-padded.
std::vector<double> kernel_response(long w, long N);

// Closed form |sin(pi k w / N) / sin(pi k / N)| with the k = 0 limit w.
double dirichlet_magnitude(long w, long N, long k);

struct SpectrumReport {
    std::vector<double> freq_bins;          // k / N
    std::vector<double> spacing_spectrum;   // |DFT| of single spacings
    std::vector<double> interval_spectrum;  // |DFT| of width-w interval spacings
    std::vector<double> ratio;              // interval / spacing (0 where spacing is 0)
    std::vector<double> kernel_response;
};

struct FilterCheck {
    SpectrumReport report;
    // Valid-region convolution identity: max |D_{i,w} - running sum| over the
    // interval sequence, relative to its largest entry.
    double conv_max_rel_dev = 0.0;
    // Bins where the ratio is meaningful: spacing magnitude above 1e-3 of its
    // max and kernel response above 1e-6 * w (near kernel zeros the ratio is
    // a quotient of noise).
    std::vector<std::uint8_t> retained;
    double ratio_max_rel_dev = 0.0;  // vs kernel response over retained bins
};

// Spectral check that width-w interval spacing acts on single spacings as a
// rectangular filter.  The transformed interval sequence is extended at both
// ends with the clamped partial sums so that it equals the full convolution
// of the spacing sequence with the kernel, which makes the transform ratio an
// identity rather than an approximation.  N must be a power of two at least
// n + w - 2.
FilterCheck filter_equivalence(const std::vector<double>& sorted, long w, long N);

struct LobeCount {
    long zeros = 0;
    long side_lobes = 0;
};

// Counts threshold crossings of a magnitude curve over bins 1..N/2: drops
// below 5% of the curve's max count as zeros, rises back count as side lobes.
LobeCount count_lobes(const std::vector<double>& magnitudes);

struct AutocovReport {
    std::vector<long> lags;
    std::vector<double> empirical_cov;
    std::vector<double> predicted;  // V * max(0, 1 - l/w)
    std::vector<double> se;         // standard error of each covariance estimate
};

// Empirical Cov(D_{i,w}, D_{i-l,w}) across replicates for l = 0..max_lag,
// against the triangular prediction.  V is the closed-form variance when the
// model has one (uniform), otherwise the lag-0 empirical value.  Requires
// max_lag <= w + 5 and i - max_lag - w >= 1.
AutocovReport autocovariance(const SimulationConfig& cfg, long i, long w, long max_lag);

}  // namespace intspace
