#pragma once

#include "semialg/polynomial.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace semialg {

/// Constraint-violation residual sum |h_j(x)| + sum max{g_i(x), 0} for the
/// system g_i <= 0, h_j = 0. Exact; zero iff x is feasible.
Rational residual_psi(const std::vector<Polynomial>& g, const std::vector<Polynomial>& h,
                      const std::vector<Rational>& x);

/// Residual for binary feasibility:
///   sqrt(sum h_j^2) + sqrt(sum max{g_i,0}^2) + sum |x_k (1 - x_k)|.
/// Radicands are exact; the square roots are floating point.
struct BinaryResidual {
    Rational h_squared_sum;
    Rational g_squared_sum;
    Rational binary_sum;
    double value;
};

BinaryResidual residual_binary(const std::vector<Polynomial>& g,
                               const std::vector<Polynomial>& h,
                               const std::vector<Rational>& x);

/// Symmetric rational matrix, row-major p x p.
using SymMatrix = std::vector<std::vector<Rational>>;

/// Smallest eigenvalue by cyclic Jacobi sweeps (tolerance 1e-12, at most 50
/// sweeps); input must be symmetric.
double lambda_min(const SymMatrix& x);

/// Exact determinant by fraction-free elimination.
Rational det_exact(const SymMatrix& x);

struct SdpResidual {
    double lam_min_part;            // max{-lambda_min(X), 0}
    Rational minor_part;            // max over principal minors I of max{-det(X_I), 0}
    std::optional<double> dist_part;   // filled only when a distance hook is supplied
};

SdpResidual residual_sdp(const SymMatrix& x,
                         const std::function<double()>& dist_hook = nullptr);

}   // namespace semialg
