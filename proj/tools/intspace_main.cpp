#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "intspace/closedform.hpp"
#include "intspace/errors.hpp"
#include "intspace/interval.hpp"
#include "intspace/profile.hpp"
#include "intspace/quadrature.hpp"
#include "intspace/simulate.hpp"
#include "intspace/spectral.hpp"
#include "intspace/variates.hpp"
#include "intspace/verify.hpp"

namespace {

std::string fmt(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fmt(long v) { return std::to_string(v); }

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void emit_row(const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k) std::cout << ',';
        std::cout << cells[k];
    }
    std::cout << '\n';
}

long next_pow2(long n) {
    long p = 1;
    while (p < n) p <<= 1;
    return p;
}

struct MomentsArgs {
    std::string dist;
    long n = 0, i = 0, w = 0;
    std::string method = "closed";
    long reps = 10000;
    std::uint64_t seed = 42;
};

int cmd_moments(const MomentsArgs& a) {
    const intspace::VariateModel model = intspace::parse_model(a.dist);
    const intspace::IntervalSpec spec{a.n, a.i, a.w};
    intspace::validate(spec);
    std::string mean_s, var_s, err_s;
    if (a.method == "closed") {
        mean_s = fmt(intspace::closedform::mean(model, spec));
        const auto var = intspace::closedform::variance(model, spec);
        if (var) {
            var_s = fmt(*var);
        } else {
            std::cerr << "note: no closed-form variance for the logistic model; field left empty\n";
        }
        err_s = fmt(0.0);
    } else if (a.method == "quad") {
        const intspace::QuadratureConfig cfg;
        const auto m1 = intspace::generic_moment(spec, model, 1, cfg);
        const auto m2 = intspace::generic_moment(spec, model, 2, cfg);
        mean_s = fmt(m1.value);
        var_s = fmt(m2.value - m1.value * m1.value);
        err_s = fmt(m2.error_estimate + 2.0 * std::abs(m1.value) * m1.error_estimate);
    } else {
        intspace::SimulationConfig cfg;
        cfg.model = model;
        cfg.n = a.n;
        cfg.reps = a.reps;
        cfg.seed = a.seed;
        cfg.widths = {a.w};
        const auto cells = intspace::run_simulation(cfg, {a.i});
        if (cells.empty()) throw intspace::domain_error("moments: no valid (i, w) cell");
        mean_s = fmt(cells[0].mean);
        var_s = fmt(cells[0].variance);
        err_s = fmt(std::sqrt(cells[0].variance / static_cast<double>(a.reps)));
    }
    emit_row({"dist", "n", "i", "w", "method", "mean", "variance", "error_estimate"});
    emit_row({csv_field(intspace::format_model(model)), fmt(a.n), fmt(a.i), fmt(a.w), a.method,
              mean_s, var_s, err_s});
    return 0;
}

struct DensityArgs {
    std::string dist;
    long n = 0, i = 0, w = 0;
    double y_min = 0.0, y_max = 0.0;
    long points = 101;
};

int cmd_density(const DensityArgs& a) {
    const intspace::VariateModel model = intspace::parse_model(a.dist);
    const intspace::IntervalSpec spec{a.n, a.i, a.w};
    intspace::validate(spec);
    if (a.points < 2) throw intspace::domain_error("density: points must be at least 2");
    if (!(a.y_max > a.y_min)) throw intspace::domain_error("density: need y-max > y-min");
    emit_row({"y", "f"});
    for (long k = 0; k < a.points; ++k) {
        const double y = a.y_min + (a.y_max - a.y_min) * static_cast<double>(k) /
                                       static_cast<double>(a.points - 1);
        emit_row({fmt(y), fmt(intspace::closedform::density(model, spec, y))});
    }
    return 0;
}

struct SimulateArgs {
    std::string dist;
    long n = 0;
    std::vector<long> w_list;
    std::vector<long> i_list;
    long reps = 10000;
    std::uint64_t seed = 42;
};

int cmd_simulate(const SimulateArgs& a) {
    intspace::SimulationConfig cfg;
    cfg.model = intspace::parse_model(a.dist);
    cfg.n = a.n;
    cfg.reps = a.reps;
    cfg.seed = a.seed;
    cfg.widths = a.w_list;
    const auto cells = intspace::run_simulation(cfg, a.i_list);
    emit_row({"i", "w", "emp_mean", "emp_var", "q25", "median", "q75", "closed_mean"});
    for (const auto& cell : cells) {
        const intspace::IntervalSpec spec{a.n, cell.i, cell.w};
        emit_row({fmt(cell.i), fmt(cell.w), fmt(cell.mean), fmt(cell.variance), fmt(cell.q25),
                  fmt(cell.median), fmt(cell.q75), fmt(intspace::closedform::mean(cfg.model, spec))});
    }
    return 0;
}

int cmd_verify(const intspace::VerifyOptions& opts) {
    const auto rows = intspace::run_verification(opts);
    emit_row({"check", "cases", "max_abs_err", "status"});
    bool all_pass = true;
    for (const auto& row : rows) {
        emit_row({row.check, fmt(row.cases), fmt(row.max_abs_err),
                  row.pass ? "pass" : "fail"});
        if (!row.pass) {
            all_pass = false;
            std::cerr << "verify: " << row.check << " failed, max_abs_err=" << fmt(row.max_abs_err)
                      << "\n";
        }
    }
    return all_pass ? 0 : 1;
}

struct SpectrumArgs {
    long n = 0, w = 0;
    std::uint64_t seed = 42;
};

int cmd_spectrum(const SpectrumArgs& a) {
    const intspace::VariateModel model{intspace::Family::uniform, 0.0, 1.0};
    intspace::RandomStream stream = intspace::replicate_stream(a.seed, 0);
    const std::vector<double> sample = intspace::sample_sorted(model, a.n, stream);
    const long N = next_pow2(a.n + a.w - 2);
    const intspace::FilterCheck check = intspace::filter_equivalence(sample, a.w, N);
    std::cerr << "conv_max_rel_dev=" << fmt(check.conv_max_rel_dev)
              << " ratio_max_rel_dev=" << fmt(check.ratio_max_rel_dev) << "\n";
    emit_row({"freq", "spacing_spectrum", "interval_spectrum", "ratio", "kernel_response",
              "retained"});
    for (std::size_t k = 0; k < check.report.freq_bins.size(); ++k)
        emit_row({fmt(check.report.freq_bins[k]), fmt(check.report.spacing_spectrum[k]),
                  fmt(check.report.interval_spectrum[k]), fmt(check.report.ratio[k]),
                  fmt(check.report.kernel_response[k]), check.retained[k] ? "1" : "0"});
    return 0;
}

struct AutocovArgs {
    long n = 0, w = 0, i = 0;
    long reps = 5000;
    std::uint64_t seed = 42;
    long max_lag = -1;
};

int cmd_autocov(const AutocovArgs& a) {
    intspace::SimulationConfig cfg;
    cfg.model = intspace::VariateModel{intspace::Family::uniform, 0.0, 1.0};
    cfg.n = a.n;
    cfg.reps = a.reps;
    cfg.seed = a.seed;
    cfg.widths = {a.w};
    const long max_lag = a.max_lag < 0 ? a.w + 5 : a.max_lag;
    const intspace::AutocovReport report = intspace::autocovariance(cfg, a.i, a.w, max_lag);
    emit_row({"lag", "empirical_cov", "predicted", "se"});
    for (std::size_t l = 0; l < report.lags.size(); ++l)
        emit_row({fmt(report.lags[l]), fmt(report.empirical_cov[l]), fmt(report.predicted[l]),
                  fmt(report.se[l])});
    return 0;
}

struct ProfileArgs {
    std::string input;
    std::string column = "0";
    std::vector<long> w_list;
};

int cmd_profile(const ProfileArgs& a) {
    const bool numeric = !a.column.empty() &&
                         a.column.find_first_not_of("0123456789") == std::string::npos;
    const intspace::Dataset data =
        numeric ? intspace::load_csv(a.input, static_cast<std::size_t>(std::stoul(a.column)))
                : intspace::load_csv(a.input, a.column);
    const intspace::SpacingProfile profile = intspace::compute_profile(data, a.w_list);
    emit_row({"w", "i", "spacing"});
    for (std::size_t k = 0; k < profile.widths.size(); ++k)
        for (const auto& [i, spacing] : profile.rows[k])
            emit_row({fmt(profile.widths[k]), fmt(i), fmt(spacing)});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"interval spacing distributions of order statistics"};
    app.require_subcommand(1);

    MomentsArgs ma;
    CLI::App* moments = app.add_subcommand("moments", "mean and variance of D_{i,w}");
    moments->add_option("--dist", ma.dist, "model, e.g. uniform:0,1 exp:1 logistic:0,1")
        ->required();
    moments->add_option("--n", ma.n, "sample size")->required();
    moments->add_option("--i", ma.i, "order-statistic index")->required();
    moments->add_option("--w", ma.w, "interval width")->required();
    moments->add_option("--method", ma.method, "closed, quad, or sim")
        ->check(CLI::IsMember({"closed", "quad", "sim"}));
    moments->add_option("--reps", ma.reps, "replicates for --method sim");
    moments->add_option("--seed", ma.seed, "random seed for --method sim");

    DensityArgs da;
    CLI::App* density = app.add_subcommand("density", "closed-form density on a y grid");
    density->add_option("--dist", da.dist)->required();
    density->add_option("--n", da.n)->required();
    density->add_option("--i", da.i)->required();
    density->add_option("--w", da.w)->required();
    density->add_option("--y-min", da.y_min, "grid start");
    density->add_option("--y-max", da.y_max, "grid end")->required();
    density->add_option("--points", da.points, "grid size");

    SimulateArgs sa;
    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo spacing summaries");
    simulate->add_option("--dist", sa.dist)->required();
    simulate->add_option("--n", sa.n)->required();
    simulate->add_option("--w-list", sa.w_list, "comma-separated widths")
        ->required()
        ->delimiter(',');
    simulate->add_option("--i-list", sa.i_list, "comma-separated indices (default: all valid)")
        ->delimiter(',');
    simulate->add_option("--reps", sa.reps);
    simulate->add_option("--seed", sa.seed);

    intspace::VerifyOptions vo;
    CLI::App* verify = app.add_subcommand("verify", "run the identity suites");
    verify->add_option("--max-n", vo.max_n);
    verify->add_option("--max-w", vo.max_w);
    verify->add_option("--seed", vo.seed);
    verify->add_flag("--canary", vo.canary)->group("");

    SpectrumArgs pa;
    CLI::App* spectrum = app.add_subcommand("spectrum", "filter-equivalence spectra");
    spectrum->add_option("--n", pa.n)->required();
    spectrum->add_option("--w", pa.w)->required();
    spectrum->add_option("--seed", pa.seed);

    AutocovArgs aa;
    CLI::App* autocov = app.add_subcommand("autocov", "lagged covariance of interval spacings");
    autocov->add_option("--n", aa.n)->required();
    autocov->add_option("--w", aa.w)->required();
    autocov->add_option("--i", aa.i)->required();
    autocov->add_option("--reps", aa.reps);
    autocov->add_option("--seed", aa.seed);
    autocov->add_option("--max-lag", aa.max_lag, "default w + 5");

    ProfileArgs fa;
    CLI::App* profile = app.add_subcommand("profile", "spacing profile of a CSV column");
    profile->add_option("--input", fa.input, "CSV path")->required();
    profile->add_option("--column", fa.column, "column index or header name");
    profile->add_option("--w-list", fa.w_list, "comma-separated widths")
        ->required()
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (moments->parsed()) return cmd_moments(ma);
        if (density->parsed()) return cmd_density(da);
        if (simulate->parsed()) return cmd_simulate(sa);
        if (verify->parsed()) return cmd_verify(vo);
        if (spectrum->parsed()) return cmd_spectrum(pa);
        if (autocov->parsed()) return cmd_autocov(aa);
        if (profile->parsed()) return cmd_profile(fa);
    } catch (const intspace::convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const intspace::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const intspace::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
