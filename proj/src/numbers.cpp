#include "semialg/numbers.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace semialg {

IntervalQ IntervalQ::operator*(const IntervalQ& o) const {
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

Rational IntervalQ::mag() const { return std::max(abs_rational(lo), abs_rational(hi)); }

Rational simplest_rational_between(const Rational& a, const Rational& b) {
    if (!(a < b)) throw std::invalid_argument("simplest_rational_between: empty interval");
    // Shared continued-fraction prefix of the two endpoints; the first place
    // an integer fits strictly inside gives the smallest denominator.
    std::vector<Int> prefix;
    Rational lo = a, hi = b;
    Rational result;
    for (;;) {
        if (lo < 0 && hi > 0) {
            result = 0;
            break;
        }
        Int f = floor_rational(lo);
        if (Rational(f) + 1 < hi) {
            result = Rational(f) + 1;
            break;
        }
        // every x in (lo,hi) has floor f; recurse on the reciprocal tail
        prefix.push_back(f);
        Rational tail_hi_inv = lo - Rational(f);
        Rational new_lo = Rational(1) / (hi - Rational(f));
        if (tail_hi_inv == 0) {
            // lo == f exactly: tail interval is (1/(hi-f), +inf)
            result = Rational(floor_rational(new_lo)) + 1;
            break;
        }
        hi = Rational(1) / tail_hi_inv;
        lo = new_lo;
    }
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
        result = Rational(*it) + Rational(1) / result;
    }
    return result;
}

}   // namespace semialg
