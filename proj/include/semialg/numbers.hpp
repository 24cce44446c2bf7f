#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace semialg {

using Int = mpz_class;
using Rational = mpq_class;

/// Canonicalized rational from numerator/denominator.
inline Rational make_rational(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow_rational(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;   // already canonical: gcd(num,den)=1 implies gcd(num^e,den^e)=1
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int floor_rational(const Rational& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Int ceil_rational(const Rational& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline int sign_of(const Rational& q) { return sgn(q); }
inline int sign_of_rational(const Rational& q) { return sgn(q); }

inline Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Exact conversion; every finite double is a rational.
inline Rational rational_from_double(double x) { return Rational(x); }

inline double to_double(const Rational& q) { return q.get_d(); }

/// log|q| without overflow for any magnitude; q must be nonzero.
inline double log_rational_abs(const Rational& q) {
    if (q == 0) throw std::invalid_argument("log_rational_abs: zero");
    long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
    double md = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
    return std::log(std::abs(mn)) - std::log(md) +
           (static_cast<double>(en) - static_cast<double>(ed)) * 0.6931471805599453;
}

/// Smallest-denominator rational strictly inside (a, b), by a Stern-Brocot
/// style descent on the continued fraction of the interval.
Rational simplest_rational_between(const Rational& a, const Rational& b);

/// Closed rational interval, for evaluating polynomials over a range.
struct IntervalQ {
    Rational lo, hi;

    IntervalQ() = default;
    IntervalQ(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
    explicit IntervalQ(const Rational& v) : lo(v), hi(v) {}

    bool contains_zero() const { return lo <= 0 && hi >= 0; }

    IntervalQ operator+(const IntervalQ& o) const { return {lo + o.lo, hi + o.hi}; }
    IntervalQ operator-(const IntervalQ& o) const { return {lo - o.hi, hi - o.lo}; }
    IntervalQ operator*(const IntervalQ& o) const;
    Rational mag() const;   // max |x| over the interval
};

}   // namespace semialg
