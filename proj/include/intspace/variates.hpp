#pragma once

#include <string>

namespace intspace {

enum class Family { uniform, exponential, logistic };

// Parameter meaning by family:
//   uniform:  p1 = a (lower), p2 = b (upper), b > a
//   exponential: p1 = lambda > 0, p2 unused
//   logistic: p1 = mu (location), p2 = sigma > 0 (scale)
struct VariateModel {
    Family family = Family::uniform;
    double p1 = 0.0;
    double p2 = 1.0;
};

void validate(const VariateModel& m);  // throws domain_error

double pdf(const VariateModel& m, double x);
double cdf(const VariateModel& m, double x);
double quantile(const VariateModel& m, double p);  // requires 0 < p < 1

// Accepts "uniform:a,b", "exp:lambda", "logistic:mu,sigma".
VariateModel parse_model(const std::string& text);
std::string format_model(const VariateModel& m);

}  // namespace intspace
