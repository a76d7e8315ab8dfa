#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "intspace/closedform.hpp"
#include "intspace/errors.hpp"
#include "intspace/profile.hpp"
#include "intspace/quadrature.hpp"
#include "intspace/simulate.hpp"
#include "intspace/spectral.hpp"
#include "intspace/variates.hpp"

namespace py = pybind11;
using namespace intspace;

namespace {

IntervalSpec make_spec(long n, long i, long w) {
    const IntervalSpec s{n, i, w};
    validate(s);
    return s;
}

py::dict cell_to_dict(const SummaryCell& c) {
    py::dict d;
    d["i"] = c.i;
    d["w"] = c.w;
    d["mean"] = c.mean;
    d["variance"] = c.variance;
    d["q25"] = c.q25;
    d["median"] = c.median;
    d["q75"] = c.q75;
    return d;
}

}  // namespace

PYBIND11_MODULE(_intspace, m) {
    m.doc() = "Distributions of interval spacings of order statistics";

    py::register_exception<intspace::domain_error>(m, "DomainError", PyExc_ValueError);
    py::register_exception<intspace::io_error>(m, "IoError", PyExc_IOError);
    py::register_exception<intspace::convergence_error>(m, "ConvergenceError",
                                                        PyExc_RuntimeError);

    m.def(
        "mean",
        [](const std::string& dist, long n, long i, long w) {
            return closedform::mean(parse_model(dist), make_spec(n, i, w));
        },
        py::arg("dist"), py::arg("n"), py::arg("i"), py::arg("w"),
        "Closed-form E[D_{i,w}] for 'uniform:a,b', 'exp:lambda' or 'logistic:mu,sigma'.");

    m.def(
        "variance",
        [](const std::string& dist, long n, long i, long w) {
            return closedform::variance(parse_model(dist), make_spec(n, i, w));
        },
        py::arg("dist"), py::arg("n"), py::arg("i"), py::arg("w"),
        "Closed-form Var[D_{i,w}]; None when the family has no closed form.");

    m.def(
        "density",
        [](const std::string& dist, long n, long i, long w, double y) {
            return closedform::density(parse_model(dist), make_spec(n, i, w), y);
        },
        py::arg("dist"), py::arg("n"), py::arg("i"), py::arg("w"), py::arg("y"),
        "Closed-form density of D_{i,w} at y.");

    m.def(
        "density_by_quadrature",
        [](const std::string& dist, long n, long i, long w, double y) {
            return generic_density(make_spec(n, i, w), parse_model(dist), y,
                                   QuadratureConfig{});
        },
        py::arg("dist"), py::arg("n"), py::arg("i"), py::arg("w"), py::arg("y"),
        "Density of D_{i,w} by quadrature of the order-statistic integral.");

    m.def(
        "moment_by_quadrature",
        [](const std::string& dist, long n, long i, long w, int order) {
            const QuadratureOutcome q =
                generic_moment(make_spec(n, i, w), parse_model(dist), order, QuadratureConfig{});
            return py::make_tuple(q.value, q.error_estimate);
        },
        py::arg("dist"), py::arg("n"), py::arg("i"), py::arg("w"), py::arg("order") = 1,
        "E[D^order] by nested quadrature; returns (value, error_estimate).");

    m.def(
        "simulate",
        [](const std::string& dist, long n, const std::vector<long>& widths, long reps,
           std::uint64_t seed, const std::vector<long>& indices) {
            SimulationConfig cfg{parse_model(dist), n, reps, seed, widths};
            py::list out;
            for (const SummaryCell& c : run_simulation(cfg, indices)) out.append(cell_to_dict(c));
            return out;
        },
        py::arg("dist"), py::arg("n"), py::arg("widths"), py::arg("reps"), py::arg("seed") = 0,
        py::arg("indices") = std::vector<long>{},
        "Monte Carlo summaries of D_{i,w}; empty indices means every valid i.");

    m.def(
        "spacings",
        [](std::vector<double> values, long w) {
            std::sort(values.begin(), values.end());
            return interval_spacings(values, w).values;
        },
        py::arg("values"), py::arg("w"),
        "Width-w interval spacings of a sample, sorted ascending first.");

    m.def(
        "profile",
        [](const std::vector<double>& values, const std::vector<long>& widths) {
            const SpacingProfile prof = compute_profile(Dataset{values, "python"}, widths);
            py::list out;
            for (std::size_t k = 0; k < prof.widths.size(); ++k)
                for (const auto& [i, d] : prof.rows[k])
                    out.append(py::make_tuple(prof.widths[k], i, d));
            return out;
        },
        py::arg("values"), py::arg("widths"),
        "Spacing profile rows (w, i, D_{i,w}) for each requested width.");

    m.def(
        "autocovariance",
        [](const std::string& dist, long n, long i, long w, long reps, std::uint64_t seed,
           long max_lag) {
            SimulationConfig cfg{parse_model(dist), n, reps, seed, {w}};
            if (max_lag < 0) max_lag = w + 5;
            const AutocovReport rep = autocovariance(cfg, i, w, max_lag);
            py::dict d;
            d["lags"] = rep.lags;
            d["empirical_cov"] = rep.empirical_cov;
            d["predicted"] = rep.predicted;
            d["se"] = rep.se;
            return d;
        },
        py::arg("dist"), py::arg("n"), py::arg("i"), py::arg("w"), py::arg("reps"),
        py::arg("seed") = 0, py::arg("max_lag") = -1,
        "Empirical lag covariance of D_{i,w} against the triangular prediction.");

    m.def("kernel_response", &kernel_response, py::arg("w"), py::arg("n_bins"),
          "DFT magnitude of the width-w averaging kernel.");
}
