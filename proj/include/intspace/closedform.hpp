#pragma once

#include <optional>

#include "intspace/interval.hpp"
#include "intspace/rational.hpp"
#include "intspace/variates.hpp"

namespace intspace::closedform {

// ---- uniform(a, b) ----------------------------------------------------
// Density and both moments depend on i only through (n, i, w) validity.
double density_uniform(const IntervalSpec& s, double a, double b, double y);
double mean_uniform(const IntervalSpec& s, double a, double b);
double var_uniform(const IntervalSpec& s, double a, double b);

// ---- exponential(lambda) ----------------------------------------------
// The *_rational forms are taken at lambda = 1; real wrappers rescale.
double density_exp(const IntervalSpec& s, double lambda, double y);
Rational mean_exp_series_rational(const IntervalSpec& s);
Rational mean_exp_sum_rational(const IntervalSpec& s);
Rational second_moment_exp_series_rational(const IntervalSpec& s);
Rational var_exp_rational(const IntervalSpec& s);
double mean_exp_series(const IntervalSpec& s, double lambda);
double mean_exp_sum(const IntervalSpec& s, double lambda);
double second_moment_exp(const IntervalSpec& s, double lambda);
double var_exp(const IntervalSpec& s, double lambda);

// ---- logistic(mu, sigma); mu cancels out of every spacing --------------
double density_logistic(const IntervalSpec& s, double sigma, double y,
                        double rel_tol = 1e-13, long max_terms = 1000000);
Rational mean_logistic_series_rational(const IntervalSpec& s);  // sigma = 1
Rational mean_logistic_sum_rational(const IntervalSpec& s);     // sigma = 1
double mean_logistic_series(const IntervalSpec& s, double sigma);
double mean_logistic_sum(const IntervalSpec& s, double sigma);

// ---- dispatch over the model ------------------------------------------
double density(const VariateModel& m, const IntervalSpec& s, double y);
double mean(const VariateModel& m, const IntervalSpec& s);
// nullopt for logistic: no closed-form variance in this family.
std::optional<double> variance(const VariateModel& m, const IntervalSpec& s);

}  // namespace intspace::closedform
