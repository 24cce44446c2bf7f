#pragma once

#include "semialg/fiber.hpp"
#include "semialg/formula.hpp"
#include "semialg/realroot.hpp"

#include <vector>

namespace semialg {

/// Collins-style projection of an arity-2 family: per member the content,
/// leading and trailing coefficients and discriminant of the square-free
/// part (all in X2), plus pairwise resultants; constants and duplicates
/// removed, results monic.
std::vector<Polynomial> project2d(const std::vector<Polynomial>& family);

/// One cell of a stack: sectors (open bands) and sections (root graphs)
/// alternate bottom-to-top; stack_index 2i is the i-th sector, 2i+1 the i-th
/// section. Signs are listed per family member and are constant on the cell.
struct CadCell {
    size_t base_index;
    size_t stack_index;
    bool is_section;
    std::vector<int> signs;
    double x_approx;
    double y_approx;
};

/// Cylindrical decomposition of the plane adapted to the family: a sign
/// decomposition of the base line plus one stack of cells per base cell.
struct CylDecomp {
    std::vector<Polynomial> family;
    std::vector<Polynomial> projection;
    std::vector<Cell1> base;
    std::vector<std::vector<CadCell>> stacks;

    size_t cell_count() const;

    /// Exact cell membership for a rational point. Returns (base, stack)
    /// indices; throws if a fiber's section count contradicts the stack.
    std::pair<size_t, size_t> locate(const Rational& x, const Rational& y) const;

    /// Signs of all family members at a point generated inside the given
    /// cell: t1, t2 in (0,1) select the position within the cell's
    /// parametrization. Exact.
    std::vector<int> probe_cell(size_t base_index, size_t stack_index, double t1,
                                double t2) const;
};

CylDecomp cad2d(const std::vector<Polynomial>& family);

/// Empirical check of polynomial growth |f(x)| <= c x^p along a curve that
/// the selector formula carves out of the family's zero set.
struct GrowthReport {
    double fitted_exponent;
    std::pair<double, double> window;
    unsigned claimed_p;
    bool pass;
    size_t samples_used;
};

GrowthReport growth_check(const std::vector<Polynomial>& family, const Formula& selector,
                          unsigned p, const std::pair<Rational, Rational>& window,
                          unsigned samples);

}   // namespace semialg
