#pragma once

#include "semialg/polynomial.hpp"
#include "semialg/upoly.hpp"

#include <vector>

namespace semialg {

/// Exact quotient P / D; throws std::logic_error if the division is not exact.
Polynomial exact_div(const Polynomial& p, const Polynomial& d);

/// Resultant of F and G with respect to the last variable, computed by a
/// subresultant pseudo-remainder sequence with exact factor bookkeeping.
/// Both inputs must have positive degree in the last variable. The result is
/// a polynomial in the remaining variables (arity reduced by one).
Polynomial resultant_wrt_last(const Polynomial& f, const Polynomial& g);

/// res(F, dF/dX_last) / lc_last(F), with the usual sign (-1)^{d(d-1)/2}.
/// Requires degree >= 2 in the last variable.
Polynomial discriminant_wrt_last(const Polynomial& f);

/// Square-free part of F viewed as a polynomial in the last variable over
/// the rational function field of the others (primitive-part based).
Polynomial squarefree_part_wrt_last(const Polynomial& f);

/// Content of an arity-2 polynomial with respect to X2: monic gcd of its
/// coefficients, a univariate polynomial in X1.
UPoly content_wrt_last_2d(const Polynomial& f);

/// Primitive gcd of two arity-2 polynomials with respect to X2 (up to a
/// rational constant), via a pseudo-remainder sequence.
Polynomial gcd_wrt_last_2d(const Polynomial& f, const Polynomial& g);

}   // namespace semialg
