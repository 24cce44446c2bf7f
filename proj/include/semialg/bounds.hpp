#pragma once

#include "semialg/numbers.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>

namespace semialg {

/// Exponent bound (8d)^{2(n+7)} on the Lojasiewicz exponent for a degree-d
/// description in n variables; requires d >= 2.
Int loja_bound(unsigned d, unsigned n);

/// Degree bound 8 d^2 (2k(2d+2)+2)(2d+3)(2d+6)^2 (2d+5)^{2k-2} on the output
/// of block elimination of k variables; requires d >= 2, k >= 1.
Int belim_degree_bound(unsigned d, unsigned k);

/// The majorant (8d)^{2k+4} that belim_degree_bound always stays below.
Int belim_majorant(unsigned d, unsigned k);

/// Exponent bound (8d)^{2n+10} for the continuous-extension construction.
Int prop264_bound(unsigned d, unsigned n);

struct BoundInputs {
    unsigned d = 0, n = 0;
    std::optional<unsigned> r, s, dbar, rbar;
};

/// Exact values of the named prior bounds; entries that a parameter set does
/// not support are listed in `omitted` with the reason. Asymptotic bounds
/// with unspecified constants are reported as symbolic strings.
struct BoundReport {
    BoundInputs inputs;
    std::map<std::string, std::variant<Int, Rational, std::string>> entries;
    std::map<std::string, std::string> omitted;
};

BoundReport comparator_bounds(unsigned d, unsigned n, std::optional<unsigned> r,
                              std::optional<unsigned> s, std::optional<unsigned> dbar,
                              std::optional<unsigned> rbar);

/// Full report: the bounds of this artifact plus the comparators.
BoundReport bound_report(unsigned d, unsigned n, std::optional<unsigned> r,
                         std::optional<unsigned> s, std::optional<unsigned> dbar,
                         std::optional<unsigned> rbar);

/// Sums-of-squares relaxation gap bound c * |f| * deg(f)^{7/5} * t^{-1/(2.5 n rho)}.
double sos_rate(double c, double f_norm, unsigned deg_f, unsigned n, unsigned rho,
                unsigned long t);

/// Feasible-descent convergence rate k^{1-rho}.
double descent_rate(unsigned rho, unsigned long k);

}   // namespace semialg
