#include "semialg/residual.hpp"

#include <cmath>
#include <stdexcept>

namespace semialg {

Rational residual_psi(const std::vector<Polynomial>& g, const std::vector<Polynomial>& h,
                      const std::vector<Rational>& x) {
    Rational acc(0);
    for (const auto& hj : h) acc += abs_rational(hj.eval(x));
    for (const auto& gi : g) {
        Rational v = gi.eval(x);
        if (v > 0) acc += v;
    }
    return acc;
}

BinaryResidual residual_binary(const std::vector<Polynomial>& g,
                               const std::vector<Polynomial>& h,
                               const std::vector<Rational>& x) {
    BinaryResidual out{Rational(0), Rational(0), Rational(0), 0.0};
    for (const auto& hj : h) {
        Rational v = hj.eval(x);
        out.h_squared_sum += v * v;
    }
    for (const auto& gi : g) {
        Rational v = gi.eval(x);
        if (v > 0) out.g_squared_sum += v * v;
    }
    for (const auto& xk : x) {
        out.binary_sum += abs_rational(xk * (Rational(1) - xk));
    }
    out.value = std::sqrt(to_double(out.h_squared_sum)) + std::sqrt(to_double(out.g_squared_sum)) +
                to_double(out.binary_sum);
    return out;
}

namespace {

void check_symmetric(const SymMatrix& x) {
    size_t p = x.size();
    for (const auto& row : x) {
        if (row.size() != p) throw std::invalid_argument("matrix is not square");
    }
    for (size_t i = 0; i < p; ++i) {
        for (size_t j = i + 1; j < p; ++j) {
            if (x[i][j] != x[j][i]) throw std::invalid_argument("matrix is not symmetric");
        }
    }
}

}   // namespace

double lambda_min(const SymMatrix& x) {
    check_symmetric(x);
    size_t p = x.size();
    if (p == 0) throw std::invalid_argument("lambda_min: empty matrix");
    std::vector<std::vector<double>> a(p, std::vector<double>(p));
    for (size_t i = 0; i < p; ++i) {
        for (size_t j = 0; j < p; ++j) a[i][j] = to_double(x[i][j]);
    }
    const double tol = 1e-12;
    const int max_sweeps = 50;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (size_t i = 0; i < p; ++i) {
            for (size_t j = i + 1; j < p; ++j) off += a[i][j] * a[i][j];
        }
        if (off <= tol * tol) break;
        for (size_t i = 0; i < p; ++i) {
            for (size_t j = i + 1; j < p; ++j) {
                if (a[i][j] == 0.0) continue;
                double theta = (a[j][j] - a[i][i]) / (2.0 * a[i][j]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (size_t k = 0; k < p; ++k) {
                    double aki = a[k][i], akj = a[k][j];
                    a[k][i] = c * aki - s * akj;
                    a[k][j] = s * aki + c * akj;
                }
                for (size_t k = 0; k < p; ++k) {
                    double aik = a[i][k], ajk = a[j][k];
                    a[i][k] = c * aik - s * ajk;
                    a[j][k] = s * aik + c * ajk;
                }
            }
        }
    }
    double lmin = a[0][0];
    for (size_t i = 1; i < p; ++i) lmin = std::min(lmin, a[i][i]);
    return lmin;
}

Rational det_exact(const SymMatrix& x) {
    size_t p = x.size();
    if (p == 0) return Rational(1);
    SymMatrix a = x;
    Rational det(1);
    for (size_t col = 0; col < p; ++col) {
        size_t pivot = col;
        while (pivot < p && a[pivot][col] == 0) ++pivot;
        if (pivot == p) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rational inv = Rational(1) / a[col][col];
        for (size_t r = col + 1; r < p; ++r) {
            if (a[r][col] == 0) continue;
            Rational factor = a[r][col] * inv;
            for (size_t c = col; c < p; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return det;
}

SdpResidual residual_sdp(const SymMatrix& x, const std::function<double()>& dist_hook) {
    check_symmetric(x);
    size_t p = x.size();
    if (p == 0 || p > 6) throw std::invalid_argument("residual_sdp: requires 1 <= p <= 6");

    SdpResidual out{0.0, Rational(0), std::nullopt};
    double lmin = lambda_min(x);
    out.lam_min_part = std::max(-lmin, 0.0);

    // all nonempty principal minors
    for (unsigned mask = 1; mask < (1u << p); ++mask) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < p; ++i) {
            if (mask & (1u << i)) idx.push_back(i);
        }
        SymMatrix sub(idx.size(), std::vector<Rational>(idx.size()));
        for (size_t i = 0; i < idx.size(); ++i) {
            for (size_t j = 0; j < idx.size(); ++j) sub[i][j] = x[idx[i]][idx[j]];
        }
        Rational d = det_exact(sub);
        if (d < 0 && -d > out.minor_part) out.minor_part = -d;
    }
    if (dist_hook) out.dist_part = dist_hook();
    return out;
}

}   // namespace semialg
