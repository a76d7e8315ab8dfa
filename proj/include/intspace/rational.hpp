#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmp.h>

namespace intspace {

// Arbitrary-precision rational, always held in canonical form (reduced,
// positive denominator). Thin RAII facade over GMP's mpq_t; arithmetic is
// exact, conversion to floating point happens only through to_real().
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long v) : Rational() { mpq_set_si(q_, v, 1); }
    Rational(long num, long den);
    explicit Rational(const std::string& text);

    Rational(const Rational& other) : Rational() { mpq_set(q_, other.q_); }
    Rational(Rational&& other) noexcept : Rational() { mpq_swap(q_, other.q_); }
    Rational& operator=(const Rational& other) {
        if (this != &other) mpq_set(q_, other.q_);
        return *this;
    }
    Rational& operator=(Rational&& other) noexcept {
        mpq_swap(q_, other.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    static Rational factorial(unsigned long k);

    Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) < 0;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) <= 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }

    // "num/den", or just "num" when the denominator is 1.
    std::string str() const;

    const __mpq_struct* raw() const { return q_; }

private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Rounds to the nearest representable value at `bits` of precision, then to
// the nearest double. bits >= 2.
double to_real(const Rational& r, unsigned bits);

}  // namespace intspace
