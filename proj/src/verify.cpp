#include "intspace/verify.hpp"

#include <algorithm>
#include <cmath>

#include "intspace/closedform.hpp"
#include "intspace/errors.hpp"
#include "intspace/interval.hpp"
#include "intspace/quadrature.hpp"
#include "intspace/rational.hpp"
#include "intspace/simulate.hpp"
#include "intspace/specfun.hpp"
#include "intspace/variates.hpp"

namespace intspace {

namespace {

CheckRow check_exp_series_vs_sum(const VerifyOptions& opts) {
    CheckRow row{"exp_series_vs_sum", 0, 0.0, true};
    const long bits = specfun::precision_bits_from_env();
    for (long n = 2; n <= opts.max_n; ++n) {
        for (long w = 1; w <= std::min(opts.max_w, n - 1); ++w) {
            for (long i = w + 1; i <= n; ++i) {
                const IntervalSpec spec{n, i, w};
                Rational series = closedform::mean_exp_series_rational(spec);
                if (opts.canary) series = -series;
                const Rational sum = closedform::mean_exp_sum_rational(spec);
                ++row.cases;
                if (!(series == sum)) {
                    row.pass = false;
                    const double err = std::abs(to_real(series - sum, bits));
                    row.max_abs_err = std::max(row.max_abs_err, err);
                }
            }
        }
    }
    return row;
}

CheckRow check_logistic_series_vs_sum(const VerifyOptions& opts) {
    CheckRow row{"logistic_series_vs_sum", 0, 0.0, true};
    const long bits = specfun::precision_bits_from_env();
    for (long n = 2; n <= opts.max_n; ++n) {
        for (long w = 1; w <= std::min(opts.max_w, n - 1); ++w) {
            for (long i = w + 1; i <= n; ++i) {
                const IntervalSpec spec{n, i, w};
                const Rational series = closedform::mean_logistic_series_rational(spec);
                const Rational sum = closedform::mean_logistic_sum_rational(spec);
                ++row.cases;
                if (!(series == sum)) {
                    row.pass = false;
                    const double err = std::abs(to_real(series - sum, bits));
                    row.max_abs_err = std::max(row.max_abs_err, err);
                }
            }
        }
    }
    return row;
}

CheckRow check_w1_reductions(const VerifyOptions& opts) {
    CheckRow row{"w1_reductions", 0, 0.0, true};
    const double tol = 1e-12;
    const VariateModel models[] = {
        VariateModel{Family::uniform, 0.0, 1.0},
        VariateModel{Family::uniform, -2.0, 3.0},
        VariateModel{Family::exponential, 2.5, 0.0},
        VariateModel{Family::logistic, 1.5, 0.7},
    };
    for (const VariateModel& model : models) {
        for (long n = 2; n <= opts.max_n; ++n) {
            for (long i = 2; i <= n; ++i) {
                const IntervalSpec spec{n, i, 1};
                double expected = 0.0;
                switch (model.family) {
                    case Family::uniform:
                        expected = (model.p2 - model.p1) / static_cast<double>(n + 1);
                        break;
                    case Family::exponential:
                        expected = 1.0 / (model.p1 * static_cast<double>(n - i + 1));
                        break;
                    case Family::logistic:
                        expected = model.p2 * static_cast<double>(n) /
                                   (static_cast<double>(i - 1) * static_cast<double>(n - i + 1));
                        break;
                }
                const double got = closedform::mean(model, spec);
                const double err = std::abs(got - expected) / std::max(1.0, std::abs(expected));
                ++row.cases;
                row.max_abs_err = std::max(row.max_abs_err, err);
                if (err > tol) row.pass = false;
            }
        }
    }
    return row;
}

IntervalSpec random_spec(RandomStream& stream, long max_n, long max_w) {
    const long n = 3 + static_cast<long>(stream.next_unit() * static_cast<double>(max_n - 2));
    const long w_cap = std::min(max_w, n - 1);
    const long w = 1 + static_cast<long>(stream.next_unit() * static_cast<double>(w_cap));
    const long i = w + 1 + static_cast<long>(stream.next_unit() * static_cast<double>(n - w));
    return IntervalSpec{n, i, w};
}

CheckRow check_normalization(const VerifyOptions& opts) {
    CheckRow row{"normalization", 0, 0.0, true};
    const double tol = 1e-8;
    QuadratureConfig cfg;
    cfg.max_subdivisions = 400;
    const VariateModel models[] = {
        VariateModel{Family::uniform, 0.0, 1.0},
        VariateModel{Family::exponential, 1.0, 0.0},
        VariateModel{Family::logistic, 0.0, 1.0},
    };
    RandomStream stream = replicate_stream(opts.seed, 101);
    for (const VariateModel& model : models) {
        for (int rep = 0; rep < 3; ++rep) {
            const IntervalSpec spec = random_spec(stream, opts.max_n, opts.max_w);
            const double y_max =
                spacing_upper_bound(model, spec.n, 1e-13 / static_cast<double>(spec.n));
            const QuadratureOutcome mass = integrate(
                [&](double y) { return closedform::density(model, spec, y); }, 0.0, y_max, cfg);
            const double err = std::abs(mass.value - 1.0);
            ++row.cases;
            row.max_abs_err = std::max(row.max_abs_err, err);
            if (err > tol) row.pass = false;
        }
    }
    return row;
}

CheckRow check_closed_vs_quadrature(const VerifyOptions& opts) {
    CheckRow row{"closed_vs_quadrature", 0, 0.0, true};
    const double tol = 1e-8;
    const QuadratureConfig cfg;
    const VariateModel models[] = {
        VariateModel{Family::uniform, 0.0, 1.0},
        VariateModel{Family::exponential, 1.0, 0.0},
        VariateModel{Family::logistic, 0.0, 1.0},
    };
    RandomStream stream = replicate_stream(opts.seed, 202);
    for (const VariateModel& model : models) {
        for (int rep = 0; rep < 2; ++rep) {
            const IntervalSpec spec = random_spec(stream, std::min(opts.max_n, 30L), opts.max_w);
            const double m = closedform::mean(model, spec);
            const auto v = closedform::variance(model, spec);
            double y_hi = m + 4.0 * (v ? std::sqrt(*v) : m);
            if (model.family == Family::uniform) y_hi = std::min(y_hi, model.p2 - model.p1);
            for (int k = 0; k < 12; ++k) {
                const double y = (k + 0.5) / 12.0 * y_hi;
                const double closed = closedform::density(model, spec, y);
                const double quad = generic_density(spec, model, y, cfg);
                const double err = std::abs(closed - quad);
                ++row.cases;
                row.max_abs_err = std::max(row.max_abs_err, err);
                if (err > tol) row.pass = false;
            }
        }
    }
    return row;
}

}  // namespace

std::vector<CheckRow> run_verification(const VerifyOptions& opts) {
    if (opts.max_n < 3) throw domain_error("verify: max_n must be at least 3");
    if (opts.max_w < 1) throw domain_error("verify: max_w must be at least 1");
    std::vector<CheckRow> rows;
    rows.push_back(check_exp_series_vs_sum(opts));
    rows.push_back(check_logistic_series_vs_sum(opts));
    rows.push_back(check_w1_reductions(opts));
    rows.push_back(check_normalization(opts));
    rows.push_back(check_closed_vs_quadrature(opts));
    return rows;
}

}  // namespace intspace
