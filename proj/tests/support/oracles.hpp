#pragma once

// Test-only oracles, kept independent of the implementation paths they check:
// resultants through Sylvester determinants, real-root counting through
// derivative-recursion bisection in doubles, Newton polygons through an
// all-pairs hull scan.

#include "semialg/polynomial.hpp"
#include "semialg/upoly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace semialg::testing {

// --- Sylvester resultant (cofactor expansion over polynomial entries) ---

inline Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g) {
    unsigned last = f.arity() - 1;
    unsigned m = *f.degree_in(last), n = *g.degree_in(last);
    size_t dim = m + n;
    std::vector<std::vector<Polynomial>> a(dim, std::vector<Polynomial>(dim, Polynomial(f.arity())));
    for (size_t row = 0; row < n; ++row) {
        for (unsigned k = 0; k <= m; ++k) a[row][row + (m - k)] = f.coeff_wrt(last, k);
    }
    for (size_t row = 0; row < m; ++row) {
        for (unsigned k = 0; k <= n; ++k) a[n + row][row + (n - k)] = g.coeff_wrt(last, k);
    }
    // cofactor expansion; dim <= ~8 in the tests
    std::function<Polynomial(std::vector<std::vector<Polynomial>>&)> det =
        [&](std::vector<std::vector<Polynomial>>& mat) -> Polynomial {
        size_t k = mat.size();
        if (k == 1) return mat[0][0];
        Polynomial acc(f.arity());
        for (size_t i = 0; i < k; ++i) {
            if (mat[i][0].is_zero()) continue;
            std::vector<std::vector<Polynomial>> minor;
            for (size_t r = 0; r < k; ++r) {
                if (r == i) continue;
                std::vector<Polynomial> row(mat[r].begin() + 1, mat[r].end());
                minor.push_back(std::move(row));
            }
            Polynomial term = mat[i][0] * det(minor);
            acc = (i % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    return det(a).drop_variable(last);
}

// --- numeric distinct-real-root finder: critical points by recursion ---

inline std::vector<double> numeric_roots(const UPoly& p) {
    int deg = up::degree(p);
    if (deg <= 0) return {};
    std::vector<double> c(p.size());
    for (size_t i = 0; i < p.size(); ++i) c[i] = to_double(p[i]);
    auto eval = [&](double x) {
        double acc = 0;
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    };
    if (deg == 1) return {-c[0] / c[1]};

    std::vector<double> crit = numeric_roots(up::derivative(p));
    double bound = 1.0 + to_double(up::cauchy_root_bound(p));
    std::vector<double> breaks{-bound};
    for (double t : crit) {
        if (t > -bound && t < bound) breaks.push_back(t);
    }
    breaks.push_back(bound);
    std::sort(breaks.begin(), breaks.end());

    std::vector<double> roots;
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
        double a = breaks[i], b = breaks[i + 1];
        double fa = eval(a), fb = eval(b);
        if (fa == 0.0) {
            if (roots.empty() || std::abs(roots.back() - a) > 1e-9) roots.push_back(a);
            continue;
        }
        if (fa * fb > 0) continue;
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (a + b);
            double fm = eval(mid);
            if (fm == 0.0) {
                a = b = mid;
                break;
            }
            if (fa * fm < 0) {
                b = mid;
            } else {
                a = mid;
                fa = fm;
            }
        }
        double r = 0.5 * (a + b);
        if (roots.empty() || std::abs(roots.back() - r) > 1e-9) roots.push_back(r);
    }
    // monotone pieces can end exactly on a root at a critical point
    double fb_last = eval(breaks.back());
    if (fb_last == 0.0) roots.push_back(breaks.back());
    return roots;
}

// --- brute-force minimal positive Newton slope ---

inline bool brute_min_slope(const Polynomial& p, Rational& out) {
    std::vector<std::pair<long, long>> pts;   // (i = eps exp, j = y exp)
    for (const auto& [m, c] : p.terms()) pts.emplace_back(m[0], m[1]);
    bool found = false;
    for (size_t a = 0; a < pts.size(); ++a) {
        for (size_t b = 0; b < pts.size(); ++b) {
            long di = pts[a].first - pts[b].first;
            long dj = pts[b].second - pts[a].second;
            if (di <= 0 || dj <= 0) continue;   // need i decreasing as j increases
            // the segment from a to b must support the whole set from below:
            // every point (i,j) satisfies i*dj + j*di >= min over segment ends
            long va = pts[a].first * dj + pts[a].second * di;
            bool support = true;
            for (const auto& q : pts) {
                if (q.first * dj + q.second * di < va) {
                    support = false;
                    break;
                }
            }
            if (!support) continue;
            Rational slope = make_rational(Int(di), Int(dj));
            if (!found || slope < out) {
                out = slope;
                found = true;
            }
        }
    }
    return found;
}

// --- random generators (deterministic seeds in each test) ---

inline Polynomial random_poly(std::mt19937& rng, unsigned arity, unsigned max_degree,
                              int coeff_range = 9, double density = 0.6) {
    std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
    std::uniform_real_distribution<double> keep(0.0, 1.0);
    Polynomial p(arity);
    // enumerate exponent tuples of total degree <= max_degree
    std::vector<unsigned> exps(arity, 0);
    std::function<void(unsigned, unsigned)> walk = [&](unsigned var, unsigned remaining) {
        if (var == arity) {
            if (keep(rng) < density) {
                int c = coeff(rng);
                if (c != 0) p.add_term(exps, Rational(c));
            }
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            exps[var] = e;
            walk(var + 1, remaining - e);
        }
        exps[var] = 0;
    };
    walk(0, max_degree);
    return p;
}

inline UPoly random_upoly(std::mt19937& rng, unsigned max_degree, int coeff_range = 9) {
    std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
    std::uniform_int_distribution<unsigned> degd(1, max_degree);
    for (;;) {
        unsigned deg = degd(rng);
        UPoly p(deg + 1, Rational(0));
        for (unsigned i = 0; i <= deg; ++i) p[i] = Rational(coeff(rng));
        up::normalize(p);
        if (up::degree(p) >= 1) return p;
    }
}

inline Rational random_rational(std::mt19937& rng, int num_range = 20, unsigned den_max = 12) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<unsigned> den(1, den_max);
    return make_rational(Int(num(rng)), Int(den(rng)));
}

}   // namespace semialg::testing
