#pragma once

#include <functional>

#include "intspace/interval.hpp"
#include "intspace/variates.hpp"

namespace intspace {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 200;

    void validate() const;
};

struct QuadratureOutcome {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels = 0;
};

// Adaptive Gauss-Kronrod 15-point integration over [lo, hi].  Throws
// convergence_error (carrying the best estimate) if the subdivision budget
// runs out before the tolerance is met.
QuadratureOutcome integrate(const std::function<double(double)>& f, double lo, double hi,
                            const QuadratureConfig& cfg);

// Upper bound y* with P(D_{i,w} > y*) <= n * eps, used to truncate
// semi-infinite moment integrals.  Computed analytically so tiny eps does not
// round 1 - eps up to 1.
double spacing_upper_bound(const VariateModel& model, long n, double eps);

// Density of D_{i,w} by quadrature of the order-statistic integral, with the
// inner variable substituted to the unit interval.  Valid for every model the
// library knows; this is the referee the closed forms are checked against.
double generic_density(const IntervalSpec& spec, const VariateModel& model, double y,
                       const QuadratureConfig& cfg);

// E[D^order] (order 1 or 2) via nested quadrature of the generic density.
QuadratureOutcome generic_moment(const IntervalSpec& spec, const VariateModel& model, int order,
                                 const QuadratureConfig& cfg);

}  // namespace intspace
