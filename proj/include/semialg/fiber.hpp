#pragma once

#include "semialg/polynomial.hpp"
#include "semialg/realroot.hpp"
#include "semialg/upoly.hpp"

#include <memory>
#include <vector>

namespace semialg {

/// Exact univariate machinery on the vertical line X1 = alpha where alpha is
/// a real algebraic number. Polynomials in X2 carry coefficients in Q(alpha),
/// each represented by a rational polynomial in X1 reduced modulo alpha's
/// defining polynomial; signs of coefficients are decided exactly through the
/// root's isolating interval. Remainder chains use pseudo-division scaled by
/// a factor that is positive at alpha, so Sturm counting stays valid without
/// any field inversion.
class FiberLine {
public:
    /// Polynomial in X2 over Q(alpha); c[j] multiplies X2^j. Normal form
    /// drops leading coefficients that vanish at alpha.
    struct FPoly {
        std::vector<UPoly> c;

        bool zero() const { return c.empty(); }
        int degree() const { return static_cast<int>(c.size()) - 1; }
    };

    explicit FiberLine(IsolatingInterval alpha);
    static FiberLine at_rational(const Rational& x);

    const IsolatingInterval& alpha() const { return alpha_; }

    int sign_coeff(const UPoly& u) const;          // sign of u(alpha)
    FPoly lift(const Polynomial& f) const;         // f of arity 2, as poly in X2
    FPoly normalize(FPoly p) const;
    FPoly derivative_y(const FPoly& p) const;
    FPoly multiply(const FPoly& a, const FPoly& b) const;

    /// u(alpha) evaluated as a coefficient of the line: reduced mod A.
    UPoly reduce(const UPoly& u) const;

    int sign_at(const FPoly& p, const Rational& y) const;   // sign of p(alpha, y)

    /// Sturm-valid chain for p on this line (counts distinct real roots in y).
    std::vector<FPoly> sturm_chain(const FPoly& p) const;
    int variations_at(const std::vector<FPoly>& chain, const Rational& y) const;
    int count_roots_in(const std::vector<FPoly>& chain, const Rational& a,
                       const Rational& b) const;

    /// Strict bound B with all real roots of p(alpha, .) inside (-B, B).
    Rational root_bound(const FPoly& p) const;

private:
    IsolatingInterval alpha_;
    UPoly defining_;   // square-free polynomial of alpha
};

/// A real root of a fiber polynomial: [lo, hi] in the y coordinate holding
/// exactly one root of p(alpha, .). lo == hi marks an exact rational root.
class FiberRoot {
public:
    FiberRoot(std::shared_ptr<const FiberLine> line, std::shared_ptr<const std::vector<FiberLine::FPoly>> chain,
              FiberLine::FPoly poly, Rational lo, Rational hi);

    const Rational& low() const { return lo_; }
    const Rational& high() const { return hi_; }
    bool is_exact() const { return lo_ == hi_; }

    void refine() const;
    void refine_below(const Rational& width) const;
    double approx(double max_width = 1e-9) const;

    /// Exact three-way comparison with a rational: -1, 0, +1 for root <,=,> y.
    int compare(const Rational& y) const;

    /// Exact sign of an arbitrary fiber polynomial q at this root.
    int sign_of(const FiberLine::FPoly& q, const std::vector<FiberLine::FPoly>& q_chain) const;

    const FiberLine& line() const { return *line_; }
    const FiberLine::FPoly& defining() const;

private:
    std::shared_ptr<const FiberLine> line_;
    std::shared_ptr<const std::vector<FiberLine::FPoly>> chain_;
    FiberLine::FPoly poly_;
    mutable Rational lo_, hi_;
};

/// Distinct real roots of p(alpha, .), sorted, as disjoint fiber roots.
std::vector<FiberRoot> isolate_fiber_roots(std::shared_ptr<const FiberLine> line,
                                           const FiberLine::FPoly& p);

/// The merged root structure of a polynomial family on one vertical line:
/// per-member isolation (cheap, low degree) plus exact cross-member merging.
/// Root indices below refer to the merged, strictly increasing root list.
class FiberStack {
public:
    FiberStack(std::shared_ptr<const FiberLine> line, const std::vector<Polynomial>& family);

    const FiberLine& line() const { return *line_; }
    size_t root_count() const { return merged_.size(); }
    const FiberRoot& root(size_t k) const;
    double root_approx(size_t k, double width = 1e-9) const;

    /// Exact sign of the given family member at the k-th merged root.
    int member_sign_at_root(size_t member, size_t k) const;
    /// Exact sign of the member at a rational height.
    int member_sign_at(size_t member, const Rational& y) const;
    /// Exact sign of an arbitrary arity-2 polynomial at the k-th root.
    int sign_at_root(const Polynomial& q, size_t k) const;
    /// Exact three-way comparison of the k-th root with a rational height.
    int compare_root(size_t k, const Rational& y) const;

    /// Rational heights strictly between consecutive roots (and beyond the
    /// ends): root_count()+1 entries.
    std::vector<Rational> sector_samples() const;

private:
    struct Member {
        FiberLine::FPoly poly;                      // zero when the member
        std::vector<FiberLine::FPoly> chain;        // vanishes on the line
        std::vector<FiberRoot> roots;
        int constant_sign = 0;                      // for degree-0 fibers
    };

    int sign_of_fpoly_at_root(const FiberLine::FPoly& q,
                              const std::vector<FiberLine::FPoly>& q_chain,
                              const FiberRoot& r) const;
    bool roots_equal(const FiberRoot& a, size_t member_b, const FiberRoot& b) const;

    std::shared_ptr<const FiberLine> line_;
    std::vector<Member> members_;
    std::vector<std::pair<size_t, size_t>> merged_;   // (member, root index)
};

}   // namespace semialg
