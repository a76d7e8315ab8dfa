#include "intspace/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "intspace/errors.hpp"

namespace intspace::specfun {

Rational binomial(long m, long k) {
    if (m < 0) throw domain_error("binomial: m must be nonnegative");
    if (k < 0 || k > m) return Rational(0);
    return Rational::factorial(m) /
           (Rational::factorial(k) * Rational::factorial(m - k));
}

Rational beta_int(long p, long q) {
    if (p < 1 || q < 1) throw domain_error("beta_int: arguments must be >= 1");
    return Rational::factorial(p - 1) * Rational::factorial(q - 1) /
           Rational::factorial(p + q - 1);
}

Rational digamma_forward_difference(long j, long m) {
    if (j < 1) throw domain_error("digamma_forward_difference: j must be >= 1");
    if (m < 0) throw domain_error("digamma_forward_difference: m must be >= 0");
    Rational sum(0);
    for (long t = 0; t < m; ++t) sum += Rational(1, j + t);
    return sum;
}

namespace {

double harmonic(long k) {
    double h = 0.0;
    for (long j = 1; j <= k; ++j) h += 1.0 / static_cast<double>(j);
    return h;
}

double direct_series(long A, long B, long C, double t, double rel_tol,
                     long max_terms) {
    double sum = 1.0;
    double term = 1.0;
    for (long k = 0; k < max_terms; ++k) {
        term *= static_cast<double>(A + k) * static_cast<double>(B + k) * t /
                (static_cast<double>(C + k) * static_cast<double>(k + 1));
        sum += term;
        if (std::abs(term) <= rel_tol * std::abs(sum)) return sum;
    }
    throw convergence_error("hyp2f1: term cap reached in the mapped series", sum,
                            std::abs(term));
}

// Expansion of F(A,B;C;t) around t=1 for d = C-A-B a nonnegative integer.
// Coefficients are harmonic-number rationals; converges geometrically in
// one_minus_t, which must come in exactly (callers know 1-t analytically).
double near_one_series(long A, long B, long C, double one_minus_t,
                       double log_one_minus_t, double rel_tol, long max_terms) {
    const long d = C - A - B;
    const double u = one_minus_t;
    const double L = log_one_minus_t;
    const double guard = std::abs(L) + 60.0;  // bound on any bracket factor

    if (d == 0) {
        const double pref =
            to_real(Rational::factorial(C - 1) /
                        (Rational::factorial(A - 1) * Rational::factorial(B - 1)),
                    64);
        double Hn = 0.0, HA = harmonic(A - 1), HB = harmonic(B - 1);
        double coef = 1.0, sum = 0.0;
        for (long n = 0; n < max_terms; ++n) {
            sum += coef * (2.0 * Hn - HA - HB - L);
            coef *= static_cast<double>(A + n) * static_cast<double>(B + n) * u /
                    (static_cast<double>(n + 1) * static_cast<double>(n + 1));
            Hn += 1.0 / static_cast<double>(n + 1);
            HA += 1.0 / static_cast<double>(A + n);
            HB += 1.0 / static_cast<double>(B + n);
            if (n >= 1 && coef * guard <= rel_tol * std::abs(sum)) return pref * sum;
        }
        throw convergence_error("hyp2f1: term cap reached near t=1", 0.0, 0.0);
    }

    const double pref1 =
        to_real(Rational::factorial(d - 1) * Rational::factorial(C - 1) /
                    (Rational::factorial(A + d - 1) * Rational::factorial(B + d - 1)),
                64);
    double s1 = 0.0, term = 1.0;
    for (long n = 0; n < d; ++n) {
        s1 += term;
        if (n + 1 < d)
            term *= static_cast<double>(A + n) * static_cast<double>(B + n) * u /
                    (static_cast<double>(n + 1) * static_cast<double>(n + 1 - d));
    }

    const double sign = (d % 2 == 0) ? -1.0 : 1.0;
    const double pref2 =
        sign *
        to_real(Rational::factorial(C - 1) /
                    (Rational::factorial(A - 1) * Rational::factorial(B - 1)),
                64) *
        std::pow(u, static_cast<double>(d));
    double coef = std::exp(-std::lgamma(static_cast<double>(d + 1)));
    double Hn = 0.0, Hnd = harmonic(d), HA = harmonic(A + d - 1),
           HB = harmonic(B + d - 1);
    double s2 = 0.0;
    for (long n = 0; n < max_terms; ++n) {
        s2 += coef * (L - Hn - Hnd + HA + HB);
        coef *= static_cast<double>(A + d + n) * static_cast<double>(B + d + n) * u /
                (static_cast<double>(n + 1) * static_cast<double>(n + 1 + d));
        Hn += 1.0 / static_cast<double>(n + 1);
        Hnd += 1.0 / static_cast<double>(n + 1 + d);
        HA += 1.0 / static_cast<double>(A + d + n);
        HB += 1.0 / static_cast<double>(B + d + n);
        const double scale = std::abs(pref1 * s1 + pref2 * s2);
        if (n >= 1 && std::abs(pref2) * coef * guard <= rel_tol * scale)
            return pref1 * s1 + pref2 * s2;
    }
    throw convergence_error("hyp2f1: term cap reached near t=1", pref1 * s1, 0.0);
}

}  // namespace

double hyp2f1_mapped(long A, long B, long C, double t, double one_minus_t,
                     double log_one_minus_t, double rel_tol, long max_terms) {
    if (A < 1 || C < 1) throw domain_error("hyp2f1: parameters must be positive");
    // t may round to exactly 1.0 while one_minus_t still carries the true
    // complement; the near-1 branch works entirely off one_minus_t.
    if (!(t >= 0.0 && t <= 1.0) || !(one_minus_t >= 0.0))
        throw domain_error("hyp2f1: mapped argument outside [0,1)");
    if (!(rel_tol > 0.0) || rel_tol > 1e-2)
        throw domain_error("hyp2f1: rel_tol must lie in (0, 1e-2]");
    if (max_terms < 1) throw domain_error("hyp2f1: max_terms must be positive");
    if (t == 0.0) return 1.0;
    // B < 1 makes the series terminate after at most 1-B+1 terms; the near-1
    // expansion does not apply there (its gamma prefactors hit poles).
    if (B < 1 || t < 0.995) return direct_series(A, B, C, t, rel_tol, max_terms);
    return near_one_series(A, B, C, one_minus_t, log_one_minus_t, rel_tol, max_terms);
}

double hyp2f1(const Hyp2f1Params& p, double z, double rel_tol, long max_terms) {
    if (p.a < 1 || p.b < 1 || p.c < 1)
        throw domain_error("hyp2f1: parameters must be positive integers");
    if (!(z <= 0.0)) throw domain_error("hyp2f1: argument must satisfy z <= 0");
    if (z == 0.0) return 1.0;
    if (std::isinf(z)) throw domain_error("hyp2f1: argument must be finite");
    const long m = std::min(p.a, p.b);
    const long other = std::max(p.a, p.b);
    const double log1mz = std::log1p(-z);     // log(1-z), exact for z <= 0
    const double t = z / (z - 1.0);
    const double one_minus_t = 1.0 / (1.0 - z);
    const double M =
        hyp2f1_mapped(m, p.c - other, p.c, t, one_minus_t, -log1mz, rel_tol, max_terms);
    return std::exp(-static_cast<double>(m) * log1mz) * M;
}

unsigned precision_bits_from_env() {
    const char* env = std::getenv("INTSPACE_PRECISION_BITS");
    if (env == nullptr || *env == '\0') return 64;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 2 || v > 16384)
        throw domain_error(std::string("INTSPACE_PRECISION_BITS: expected an integer "
                                       "in [2, 16384], got '") +
                           env + "'");
    return static_cast<unsigned>(v);
}

}  // namespace intspace::specfun
