#pragma once

#include "semialg/polynomial.hpp"
#include "semialg/upoly.hpp"

#include <memory>
#include <vector>

namespace semialg {

/// Shared isolation context: square-free defining polynomial and its Sturm chain.
struct SturmContext {
    UPoly squarefree;
    std::vector<UPoly> chain;
    // a rational root p/q in lowest terms has q dividing the leading
    // coefficient of the primitive integer form
    Int rational_den_bound;

    explicit SturmContext(UPoly sf);
};

/// One real root of a univariate polynomial, held as [low, high] containing
/// exactly that root of the square-free part; low == high means the root is
/// the rational value itself. Refinement narrows the interval in place and
/// never changes any exact answer derived from it.
class IsolatingInterval {
public:
    IsolatingInterval(std::shared_ptr<const SturmContext> ctx, Rational low, Rational high);

    /// The root as the exact rational q (point interval).
    static IsolatingInterval exact(std::shared_ptr<const SturmContext> ctx, Rational q);

    const Rational& low() const { return low_; }
    const Rational& high() const { return high_; }
    bool is_exact() const { return low_ == high_; }
    const UPoly& polynomial() const { return ctx_->squarefree; }

    /// Halve the width (collapses to a point if the midpoint is the root).
    void refine() const;
    void refine_below(const Rational& width) const;

    /// Decide whether the root is rational; collapses to a point if so.
    void detect_exact() const;

    /// Exact sign of q at the root.
    int sign_of(const UPoly& q) const;

    /// Exact three-way comparison with a rational: -1, 0, +1 for root <,=,> q.
    int compare(const Rational& q) const;

    /// Exact three-way comparison with another root.
    int compare(const IsolatingInterval& other) const;

    double approx(double max_width = 1e-12) const;

private:
    std::shared_ptr<const SturmContext> ctx_;
    mutable Rational low_, high_;
};

/// Distinct real roots as disjoint sorted isolating intervals.
std::vector<IsolatingInterval> isolate_roots(const Polynomial& p);
std::vector<IsolatingInterval> isolate_roots(const UPoly& p);

/// Distinct real roots in the open interval (a,b); endpoints must not be roots.
int count_roots_in(const Polynomial& p, const Rational& a, const Rational& b);

/// Sign of q at the given root.
int sign_at_root(const Polynomial& q, const IsolatingInterval& root);

/// Multiplicity of the root in p (p need not be square-free).
unsigned root_multiplicity(const UPoly& p, const IsolatingInterval& root);

/// Thom encoding: signs[j] is the sign of the j-th derivative at the root;
/// signs[0] is always 0.
struct ThomEncoding {
    IsolatingInterval root;
    std::vector<int> signs;
};

/// One encoding per distinct real root, in increasing root order.
std::vector<ThomEncoding> thom_encode_roots(const Polynomial& p);

/// Total sign assignment over an indexed family.
using SignCondition = std::vector<int>;

/// A cell of the decomposition of the line induced by the roots of a family:
/// either a root point or an open interval between consecutive roots (or an
/// unbounded end), with a rational sample for interval cells.
struct Cell1 {
    bool is_point;
    std::optional<IsolatingInterval> point;   // set when is_point
    std::optional<Rational> sample;           // set when !is_point
    SignCondition signs;                      // one entry per family member
};

/// The ordered decomposition of the line adapted to the family, with the
/// full sign vector on each cell. An empty family yields the single cell R.
std::vector<Cell1> realizable_sign_conditions_1d(const std::vector<Polynomial>& family);

}   // namespace semialg
