#pragma once

#include "semialg/numbers.hpp"
#include "semialg/polynomial.hpp"

#include <vector>

namespace semialg {

/// Dense univariate polynomial over Q: coeffs[i] multiplies X^i, no trailing
/// zero coefficients. The zero polynomial is the empty vector.
using UPoly = std::vector<Rational>;

namespace up {

UPoly from_polynomial(const Polynomial& p);                       // requires arity 1
Polynomial to_polynomial(const UPoly& p);

void normalize(UPoly& p);
inline bool is_zero(const UPoly& p) { return p.empty(); }
inline int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }
inline const Rational& leading(const UPoly& p) { return p.back(); }

UPoly constant(const Rational& c);
UPoly identity();                                                 // the polynomial X

UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly neg(const UPoly& a);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const Rational& c);
UPoly derivative(const UPoly& a);

Rational eval(const UPoly& p, const Rational& x);
double eval_double(const UPoly& p, double x);
IntervalQ eval_interval(const UPoly& p, const IntervalQ& x);

/// Quotient and remainder of exact division over Q; b must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly rem(const UPoly& a, const UPoly& b);

/// Monic gcd; gcd(0,0) is 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// P / gcd(P, P'): same distinct roots, all simple.
UPoly squarefree_part(const UPoly& p);

/// Signed remainder sequence: P, P', then -rem of the two preceding entries,
/// ending at the last nonzero element (a constant, or the gcd).
std::vector<UPoly> sturm_sequence(const UPoly& p);

/// Sign variations of the sequence evaluated at x (zeros skipped).
int sign_variations_at(const std::vector<UPoly>& chain, const Rational& x);
/// Sign variations at -infinity / +infinity.
int sign_variations_at_neg_inf(const std::vector<UPoly>& chain);
int sign_variations_at_pos_inf(const std::vector<UPoly>& chain);

/// Strict upper bound on |root| for all real roots: 1 + max|a_i|/|a_d|.
Rational cauchy_root_bound(const UPoly& p);

/// Distinct real roots in the open interval (a,b); requires p(a), p(b) != 0.
int count_roots_in(const UPoly& p, const Rational& a, const Rational& b);
/// Distinct real roots over the whole line.
int count_real_roots(const UPoly& p);

}   // namespace up
}   // namespace semialg
