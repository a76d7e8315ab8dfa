#pragma once

#include <cstdint>
#include <vector>

#include "intspace/variates.hpp"

namespace intspace {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
inline constexpr int kHistogramBins = 100;

// splitmix64.  Small state, full 64-bit output, and cheap to fork one
// independent stream per replicate.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t state) : state_(state) {}

    std::uint64_t next_u64();

    // Uniform on (0, 1), endpoints excluded.
    double next_unit();

  private:
    std::uint64_t state_;
};

// Stream for one replicate: the lane index is folded into the seed and pushed
// through the finalizer so per-replicate sequences do not overlap.
RandomStream replicate_stream(std::uint64_t seed, std::uint64_t replicate);

struct SimulationConfig {
    VariateModel model;
    long n = 0;
    long reps = 0;
    std::uint64_t seed = 0;
    std::vector<long> widths;

    void validate() const;
};

struct SpacingSeries {
    std::vector<double> values;  // values[k] = sorted[k + w] - sorted[k]
    long n = 0;
    long w = 0;
};

// One sorted sample of n variates drawn from the model.
std::vector<double> sample_sorted(const VariateModel& model, long n, RandomStream& stream);

// All interval spacings of width w of an ascending sample.
SpacingSeries interval_spacings(const std::vector<double>& sorted, long w);

struct DecompositionReport {
    bool ok = false;
    double max_abs_dev = 0.0;
    double scale = 0.0;
};

// Structural identities on one sample: every width-w spacing equals the sum
// of its w single spacings, splits in half for even w, and differences of
// shifted spacings telescope to the boundary singles.
DecompositionReport decomposition_check(const std::vector<double>& sorted, long w,
                                        double rel_tol = 1e-12);

struct SummaryCell {
    long i = 0;
    long w = 0;
    double mean = 0.0;
    double variance = 0.0;
    double q25 = 0.0;
    double median = 0.0;
    double q75 = 0.0;
    std::vector<long> histogram;  // kHistogramBins bins over [0, hist_max]
    double hist_max = 0.0;
};

// Linear-interpolation quantile of an ascending vector (R type 7).
double quantile_type7(const std::vector<double>& sorted_values, double p);

// Monte Carlo summaries of D_{i,w} for each width in cfg.widths and each
// index in `indices` (empty means every valid i for that width).  Replicates
// are processed in a fixed order, so results are reproducible per seed.
std::vector<SummaryCell> run_simulation(const SimulationConfig& cfg,
                                        const std::vector<long>& indices);

}  // namespace intspace
