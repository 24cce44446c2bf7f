#include "semialg/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace semialg {

Int loja_bound(unsigned d, unsigned n) {
    if (d < 2) throw std::invalid_argument("loja_bound: requires d >= 2");
    if (n < 1) throw std::invalid_argument("loja_bound: requires n >= 1");
    return pow_int(Int(8) * d, 2ul * (n + 7));
}

Int belim_degree_bound(unsigned d, unsigned k) {
    if (d < 2) throw std::invalid_argument("belim_degree_bound: requires d >= 2");
    if (k < 1) throw std::invalid_argument("belim_degree_bound: requires k >= 1");
    Int dd(d);
    Int v = Int(8) * dd * dd;
    v *= Int(2) * k * (2 * dd + 2) + 2;
    v *= 2 * dd + 3;
    v *= pow_int(2 * dd + 6, 2);
    v *= pow_int(2 * dd + 5, 2ul * k - 2);
    return v;
}

Int belim_majorant(unsigned d, unsigned k) { return pow_int(Int(8) * d, 2ul * k + 4); }

Int prop264_bound(unsigned d, unsigned n) {
    if (d < 2) throw std::invalid_argument("prop264_bound: requires d >= 2");
    if (n < 1) throw std::invalid_argument("prop264_bound: requires n >= 1");
    return pow_int(Int(8) * d, 2ul * n + 10);
}

namespace {

Int ipow(unsigned long base, unsigned long e) { return pow_int(Int(base), e); }

}   // namespace

BoundReport comparator_bounds(unsigned d, unsigned n, std::optional<unsigned> r,
                              std::optional<unsigned> s, std::optional<unsigned> dbar,
                              std::optional<unsigned> rbar) {
    if (n < 1) throw std::invalid_argument("comparator_bounds: requires n >= 1");
    BoundReport rep;
    rep.inputs = BoundInputs{d, n, r, s, dbar, rbar};

    auto omit = [&](const std::string& name, const std::string& why) {
        rep.omitted.emplace(name, why);
    };

    // Kurdyka-Spodzieja: dbar (6 dbar - 3)^{n+s+rbar-1}, isolated-zero variant
    // ((2 dbar - 1)^{n+s+rbar} + 1) / 2
    if (!dbar || !rbar || !s) {
        omit("kurdyka", "needs dbar, s and rbar");
        omit("kurdyka_isolated_zero", "needs dbar, s and rbar");
    } else if (*dbar < 2) {
        omit("kurdyka", "requires dbar >= 2");
        omit("kurdyka_isolated_zero", "requires dbar >= 2");
    } else {
        unsigned long e = static_cast<unsigned long>(n) + *s + *rbar;
        if (e < 1) {
            omit("kurdyka", "exponent n+s+rbar-1 below 0");
        } else {
            rep.entries.emplace("kurdyka", Int(Int(*dbar) * ipow(6ul * *dbar - 3, e - 1)));
        }
        rep.entries.emplace("kurdyka_isolated_zero",
                            Int((ipow(2ul * *dbar - 1, e) + 1) / 2));
    }

    // LMP15: min{(d+1)(3d)^{n+r+s-1}, d(6d-3)^{n+r-1}}; compact case
    // ((2d-1)^{n+r}+1)/2
    if (d < 2) {
        omit("lmp15", "requires d >= 2");
        omit("lmp15_compact", "requires d >= 2");
    } else if (!r || !s) {
        omit("lmp15", "needs r and s");
        omit("lmp15_compact", "needs r");
    } else {
        unsigned long e1 = static_cast<unsigned long>(n) + *r + *s;
        unsigned long e2 = static_cast<unsigned long>(n) + *r;
        if (e1 < 1 || e2 < 1) {
            omit("lmp15", "exponent below 0");
        } else {
            Int first = Int(Int(d + 1) * ipow(3ul * d, e1 - 1));
            Int second = Int(Int(d) * ipow(6ul * d - 3, e2 - 1));
            rep.entries.emplace("lmp15", first < second ? first : second);
        }
        rep.entries.emplace("lmp15_compact", Int((ipow(2ul * d - 1, e2) + 1) / 2));
    }

    // Kollar: B(n-1) d^n with B(m) = binomial(m, floor(m/2))
    if (d < 2) {
        omit("kollar", "requires d >= 2");
    } else {
        rep.entries.emplace("kollar", Int(binomial(n - 1, (n - 1) / 2) * ipow(d, n)));
    }

    // gradient inequalities: exact rationals in (0,1)
    if (d < 2) {
        omit("gradient_isolated_singularity", "requires d >= 2");
        omit("gradient_dacunto_kurdyka", "requires d >= 2");
        omit("gradient_nash", "requires d >= 2");
    } else {
        rep.entries.emplace("gradient_isolated_singularity",
                            Rational(Rational(1) - Rational(1) / Rational(Int(ipow(d - 1, n) + 1))));
        Int first = Int(Int(d) * ipow(3ul * d - 4, n - 1));
        Int best = first;
        if (n >= 2) {
            Int second = Int(Int(2) * d * ipow(3ul * d - 3, n - 2));
            if (second > best) best = second;
        }
        rep.entries.emplace("gradient_dacunto_kurdyka", Rational(Rational(1) - Rational(1) / Rational(best)));
        rep.entries.emplace("gradient_nash",
                            Rational(Rational(1) - Rational(1) / Rational(Int(2 * ipow(2ul * d - 1, 3ul * n + 1)))));
    }

    // convex case: min{((2d-1)^n+1)/2, binomial(n-1, floor((n-1)/2)) d^n}
    if (d < 2) {
        omit("convex", "requires d >= 2");
    } else {
        Int first = Int((ipow(2ul * d - 1, n) + 1) / 2);
        Int second = Int(binomial(n - 1, (n - 1) / 2) * ipow(d, n));
        rep.entries.emplace("convex", first < second ? first : second);
    }

    // bounds with unspecified constants stay symbolic
    rep.entries.emplace("solerno", std::string("D^(c1*n) with D the sum of degrees, c1 universal"));
    return rep;
}

BoundReport bound_report(unsigned d, unsigned n, std::optional<unsigned> r,
                         std::optional<unsigned> s, std::optional<unsigned> dbar,
                         std::optional<unsigned> rbar) {
    BoundReport rep = comparator_bounds(d, n, r, s, dbar, rbar);
    if (d >= 2) {
        rep.entries.emplace("loja_bound", loja_bound(d, n));
        rep.entries.emplace("prop264_bound", prop264_bound(d, n));
        rep.entries.emplace("belim_degree_bound_k_eq_n", belim_degree_bound(d, n));
    } else {
        rep.omitted.emplace("loja_bound", "requires d >= 2");
        rep.omitted.emplace("prop264_bound", "requires d >= 2");
        rep.omitted.emplace("belim_degree_bound_k_eq_n", "requires d >= 2");
    }
    rep.entries.emplace("error_bound_general_dim",
                        std::string("d^O(n^2); constants unspecified"));
    rep.entries.emplace("sdp_exponent",
                        std::string("max{d,p}^O(p^4); constants unspecified"));
    return rep;
}

double sos_rate(double c, double f_norm, unsigned deg_f, unsigned n, unsigned rho,
                unsigned long t) {
    if (t == 0) throw std::invalid_argument("sos_rate: t must be positive");
    if (c <= 0 || f_norm <= 0 || deg_f == 0 || n == 0 || rho == 0)
        throw std::invalid_argument("sos_rate: all inputs must be positive");
    double exponent = -1.0 / (2.5 * static_cast<double>(n) * static_cast<double>(rho));
    return c * f_norm * std::pow(static_cast<double>(deg_f), 1.4) *
           std::pow(static_cast<double>(t), exponent);
}

double descent_rate(unsigned rho, unsigned long k) {
    if (rho < 1 || k < 1) throw std::invalid_argument("descent_rate: requires rho >= 1, k >= 1");
    return std::pow(static_cast<double>(k), 1.0 - static_cast<double>(rho));
}

}   // namespace semialg
