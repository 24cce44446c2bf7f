#pragma once

#include "semialg/formula.hpp"
#include "semialg/realroot.hpp"

#include <variant>
#include <vector>

namespace semialg {

/// Nonempty list of pairwise distinct rational points of common arity.
struct PointSet {
    std::vector<std::vector<Rational>> points;

    explicit PointSet(std::vector<std::vector<Rational>> pts);
    unsigned arity() const { return static_cast<unsigned>(points.front().size()); }
};

/// The graph of dist(., M) for finite M, as the degree-2 formula
///   (T >= 0) and /\_i (T^2 >= |X-p_i|^2) and \/_i (T^2 = |X-p_i|^2)
/// in the n+1 variables (X, T).
Formula dist_formula_finite(const PointSet& m);

struct FiniteDistance {
    Rational squared;   // exact min_i |x - p_i|^2
    double value;       // floating square root
};

FiniteDistance dist_to_finite(const PointSet& m, const std::vector<Rational>& x);

/// Exact distance from x to the closed set S = R(phi, R) defined by a
/// univariate formula. Either a rational value or a refinable algebraic
/// value |root - x| given by the root and the offset x.
struct AlgebraicDistance {
    IsolatingInterval root;
    Rational offset;    // distance = |root - offset|

    double approx(double width = 1e-12) const;
};

struct Dist1Result {
    std::variant<Rational, AlgebraicDistance> value;
    size_t witness_cell;        // index into the cell decomposition
    std::vector<Cell1> cells;   // the decomposition of the line used

    double approx(double width = 1e-12) const;
    bool is_zero() const;
};

Dist1Result dist_1d(const Formula& phi, const Rational& x);

}   // namespace semialg
