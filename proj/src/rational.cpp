#include "intspace/rational.hpp"

#include <mpfr.h>

#include <ostream>

#include "intspace/errors.hpp"

namespace intspace {

Rational::Rational(long num, long den) : Rational() {
    if (den == 0) throw domain_error("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    mpq_set_si(q_, num, static_cast<unsigned long>(den));
    mpq_canonicalize(q_);
}

Rational::Rational(const std::string& text) : Rational() {
    if (text.empty() || mpq_set_str(q_, text.c_str(), 10) != 0)
        throw domain_error("rational: cannot parse '" + text + "'");
    if (mpz_sgn(mpq_denref(q_)) == 0)
        throw domain_error("rational: zero denominator in '" + text + "'");
    if (mpz_sgn(mpq_denref(q_)) < 0) {
        mpz_neg(mpq_numref(q_), mpq_numref(q_));
        mpz_neg(mpq_denref(q_), mpq_denref(q_));
    }
    mpq_canonicalize(q_);
}

Rational Rational::factorial(unsigned long k) {
    Rational r;
    mpz_fac_ui(mpq_numref(r.q_), k);
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw domain_error("rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

std::string Rational::str() const {
    char* s = mpq_get_str(nullptr, 10, q_);
    std::string out(s);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(s, out.size() + 1);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

double to_real(const Rational& r, unsigned bits) {
    if (bits < 2) throw domain_error("to_real: precision must be at least 2 bits");
    mpfr_t x;
    mpfr_init2(x, bits);
    mpfr_set_q(x, r.raw(), MPFR_RNDN);
    double out = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return out;
}

}  // namespace intspace
