#include "intspace/closedform.hpp"

#include <cmath>

#include "intspace/errors.hpp"
#include "intspace/specfun.hpp"

namespace intspace::closedform {

namespace {

double to_double(const Rational& r) { return to_real(r, specfun::precision_bits_from_env()); }

// w * C(n-i+w, n-i) as an exact rational, shared by the exponential forms.
Rational exp_prefactor(const IntervalSpec& s) {
    return Rational(s.w) * specfun::binomial(s.n - s.i + s.w, s.n - s.i);
}

// w * prod_{j=1..w} (i-j)(n-i+j) / (j(n+j)), the logistic density prefactor.
Rational logistic_prefactor(const IntervalSpec& s) {
    Rational p(s.w);
    for (long j = 1; j <= s.w; ++j) {
        p *= Rational((s.i - j) * (s.n - s.i + j), j * (s.n + j));
    }
    return p;
}

}  // namespace

// ---- uniform ------------------------------------------------------------

double density_uniform(const IntervalSpec& s, double a, double b, double y) {
    validate(s);
    if (!(b > a)) throw domain_error("uniform: requires b > a");
    const double range = b - a;
    if (y < 0.0 || y > range) return 0.0;
    const Rational pref =
        Rational::factorial(s.n) /
        (Rational::factorial(s.w - 1) * Rational::factorial(s.n - s.w));
    return to_double(pref) * std::pow(y, static_cast<double>(s.w - 1)) *
           std::pow(range - y, static_cast<double>(s.n - s.w)) /
           std::pow(range, static_cast<double>(s.n));
}

double mean_uniform(const IntervalSpec& s, double a, double b) {
    validate(s);
    if (!(b > a)) throw domain_error("uniform: requires b > a");
    return static_cast<double>(s.w) * (b - a) / static_cast<double>(s.n + 1);
}

double var_uniform(const IntervalSpec& s, double a, double b) {
    validate(s);
    if (!(b > a)) throw domain_error("uniform: requires b > a");
    const double scale = (b - a) / static_cast<double>(s.n + 1);
    return static_cast<double>(s.w) * static_cast<double>(s.n + 1 - s.w) /
           static_cast<double>(s.n + 2) * scale * scale;
}

// ---- exponential ----------------------------------------------------------

double density_exp(const IntervalSpec& s, double lambda, double y) {
    validate(s);
    if (!(lambda > 0.0)) throw domain_error("exp: requires lambda > 0");
    if (y < 0.0) return 0.0;
    const double pref = to_double(exp_prefactor(s));
    const double onemem = -std::expm1(-lambda * y);  // 1 - e^{-lambda y}
    return pref * lambda * std::exp(-lambda * y * static_cast<double>(s.n - s.i + 1)) *
           std::pow(onemem, static_cast<double>(s.w - 1));
}

Rational mean_exp_series_rational(const IntervalSpec& s) {
    validate(s);
    // Alternating binomial series; the sign in front makes every value positive.
    Rational sum(0);
    for (long k = 0; k <= s.w - 1; ++k) {
        const long base = s.n - s.i + s.w - k;
        Rational term = specfun::binomial(s.w - 1, k) * Rational(1, base * base);
        if (k % 2 != 0) term = -term;
        sum += term;
    }
    if ((s.w - 1) % 2 != 0) sum = -sum;
    return exp_prefactor(s) * sum;
}

Rational mean_exp_sum_rational(const IntervalSpec& s) {
    validate(s);
    Rational sum(0);
    for (long j = 0; j <= s.w - 1; ++j) sum += Rational(1, s.n - s.i + j + 1);
    return sum;
}

Rational second_moment_exp_series_rational(const IntervalSpec& s) {
    validate(s);
    Rational sum(0);
    for (long k = 0; k <= s.w - 1; ++k) {
        const long base = s.n - s.i + s.w - k;
        Rational term =
            specfun::binomial(s.w - 1, k) * Rational(1, base * base) * Rational(1, base);
        if (k % 2 != 0) term = -term;
        sum += term;
    }
    // Same leading sign as the mean series; without it the even-w values
    // come out negative, which a second moment cannot be.
    if ((s.w - 1) % 2 != 0) sum = -sum;
    return exp_prefactor(s) * Rational(2) * sum;
}

Rational var_exp_rational(const IntervalSpec& s) {
    const Rational m = mean_exp_series_rational(s);
    return second_moment_exp_series_rational(s) - m * m;
}

double mean_exp_series(const IntervalSpec& s, double lambda) {
    if (!(lambda > 0.0)) throw domain_error("exp: requires lambda > 0");
    return to_double(mean_exp_series_rational(s)) / lambda;
}

double mean_exp_sum(const IntervalSpec& s, double lambda) {
    if (!(lambda > 0.0)) throw domain_error("exp: requires lambda > 0");
    return to_double(mean_exp_sum_rational(s)) / lambda;
}

double second_moment_exp(const IntervalSpec& s, double lambda) {
    if (!(lambda > 0.0)) throw domain_error("exp: requires lambda > 0");
    return to_double(second_moment_exp_series_rational(s)) / (lambda * lambda);
}

double var_exp(const IntervalSpec& s, double lambda) {
    if (!(lambda > 0.0)) throw domain_error("exp: requires lambda > 0");
    return to_double(var_exp_rational(s)) / (lambda * lambda);
}

// ---- logistic -------------------------------------------------------------

double density_logistic(const IntervalSpec& s, double sigma, double y,
                        double rel_tol, long max_terms) {
    validate(s);
    if (!(sigma > 0.0)) throw domain_error("logistic: requires sigma > 0");
    if (y < 0.0) return 0.0;
    if (y == 0.0 && s.w > 1) return 0.0;

    const long a = s.i;
    const long b = s.n - s.i + s.w + 1;
    const long c = s.n + s.w + 1;
    const long m = std::min(a, b);  // pivot; m >= w+1 for every valid spec
    const long d = std::max(a, b) - m;
    const double v = y / sigma;
    const double pref = to_double(logistic_prefactor(s));

    // Far-tail cutoff: the mapped series factor M(t) is bounded by its t=1
    // value (d >= 1) or by a log-linear cap (d = 0), so
    //   f(y) <= pref/sigma * e^{(w-m)v} * M_cap
    // with w - m <= -1. Below 1e-18 the density is returned as 0, which keeps
    // integration off the far tail where the series cost grows like e^v.
    double log_mcap;
    if (d >= 1) {
        log_mcap = std::lgamma(static_cast<double>(c)) +
                   std::lgamma(static_cast<double>(d)) -
                   2.0 * std::lgamma(static_cast<double>(c - m));
    } else {
        log_mcap = std::lgamma(static_cast<double>(c)) -
                   2.0 * std::lgamma(static_cast<double>(m)) +
                   std::log(2.0 * (v + 4.0));
    }
    const double log_bound = std::log(pref / sigma) +
                             static_cast<double>(s.w - m) * v + log_mcap;
    if (log_bound < std::log(1e-18)) return 0.0;

    // f = pref/sigma * e^{(w-m)v} * (1-e^{-v})^{w-1} * M(t), t = 1-e^{-v}.
    // Grouping the exponentials this way keeps every factor finite: e^v and
    // (e^v-1)^{w-1} on their own overflow long before the density does.
    const double t = -std::expm1(-v);
    const double one_minus_t = std::exp(-v);
    const double M =
        specfun::hyp2f1_mapped(m, c - std::max(a, b), c, t, one_minus_t, -v,
                               rel_tol, max_terms);
    return pref / sigma * std::exp(static_cast<double>(s.w - m) * v) *
           std::pow(t, static_cast<double>(s.w - 1)) * M;
}

Rational mean_logistic_series_rational(const IntervalSpec& s) {
    validate(s);
    const long n = s.n, i = s.i, w = s.w;
    Rational total(0);
    for (long k = 0; k <= w - 1; ++k) {
        const Rational pref =
            Rational::factorial(n) /
            (Rational::factorial(i - w - 1) * Rational::factorial(w - 1 - k) *
             Rational::factorial(n - i + 1 + k));
        Rational bracket =
            specfun::digamma_forward_difference(i - k - 1, 1) * Rational(1, i - k - 1);
        for (long l = 1; l <= n - i + w - 1; ++l) {
            bracket -= Rational(1, n - i + w - l) *
                       specfun::beta_int(n - i + w + 1 - l, i - k - 1);
        }
        // Zero-coefficient guard: at k = w-1 this term's coefficient w-1-k
        // vanishes while its beta argument i-k-2 can reach 0; skip before
        // evaluating anything.
        if (w - 1 - k != 0) {
            bracket -= Rational(w - 1 - k, n - i + w - 1) *
                       specfun::beta_int(n - i + w + 1, i - k - 2);
        }
        for (long l = 2; l <= w - 1 - k; ++l) {
            for (long j = 0; j <= l - 1; ++j) {
                const Rational s3 =
                    Rational::factorial(w - 1 - k) / Rational::factorial(w - 1 - k - l) *
                    (Rational::factorial(n - i + w - l - 1) /
                     Rational::factorial(n - i + w - l + j)) *
                    (Rational(1, l) / Rational::factorial(l - 1 - j));
                Rational term = s3 * specfun::beta_int(n - i + w + 1 + j, i - k - 2 - j);
                if (l % 2 != 0) term = -term;
                bracket += term;
            }
        }
        Rational contribution = pref * bracket;
        if ((w - 1 - k) % 2 != 0) contribution = -contribution;
        total += contribution;
    }
    return total;
}

Rational mean_logistic_sum_rational(const IntervalSpec& s) {
    validate(s);
    Rational sum(0);
    for (long j = 0; j <= s.w - 1; ++j)
        sum += Rational(s.n, (s.i - j - 1) * (s.n - s.i + j + 1));
    return sum;
}

double mean_logistic_series(const IntervalSpec& s, double sigma) {
    if (!(sigma > 0.0)) throw domain_error("logistic: requires sigma > 0");
    return sigma * to_double(mean_logistic_series_rational(s));
}

double mean_logistic_sum(const IntervalSpec& s, double sigma) {
    if (!(sigma > 0.0)) throw domain_error("logistic: requires sigma > 0");
    return sigma * to_double(mean_logistic_sum_rational(s));
}

// ---- dispatch ---------------------------------------------------------------

double density(const VariateModel& m, const IntervalSpec& s, double y) {
    validate(m);
    switch (m.family) {
        case Family::uniform:
            return density_uniform(s, m.p1, m.p2, y);
        case Family::exponential:
            return density_exp(s, m.p1, y);
        case Family::logistic:
            return density_logistic(s, m.p2, y);
    }
    throw domain_error("density: unknown family");
}

double mean(const VariateModel& m, const IntervalSpec& s) {
    validate(m);
    switch (m.family) {
        case Family::uniform:
            return mean_uniform(s, m.p1, m.p2);
        case Family::exponential:
            return mean_exp_sum(s, m.p1);
        case Family::logistic:
            return mean_logistic_sum(s, m.p2);
    }
    throw domain_error("mean: unknown family");
}

std::optional<double> variance(const VariateModel& m, const IntervalSpec& s) {
    validate(m);
    switch (m.family) {
        case Family::uniform:
            return var_uniform(s, m.p1, m.p2);
        case Family::exponential:
            return var_exp(s, m.p1);
        case Family::logistic:
            return std::nullopt;
    }
    throw domain_error("variance: unknown family");
}

}  // namespace intspace::closedform
