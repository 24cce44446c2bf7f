#pragma once

#include "semialg/formula.hpp"
#include "semialg/upoly.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace semialg {

/// Deterministic counter-based generator: the stream for (seed, index) never
/// depends on evaluation order, so estimates are reproducible bit for bit.
uint64_t mix_seed(uint64_t seed, uint64_t index);
double uniform01(uint64_t seed, uint64_t index);

using Evaluator = std::function<double(const std::vector<double>&)>;

/// Curve t -> (c_1(t), ..., c_n(t)) with polynomial components.
struct CurveSpec {
    std::vector<UPoly> components;

    std::vector<double> at(double t) const;
};

struct SampleSet {
    std::vector<std::vector<double>> points;
    std::vector<std::pair<double, double>> values;   // per-point pair, see users
    double acceptance_ratio = 1.0;
    uint64_t seed = 0;
};

/// Seeded uniform rejection sampling of `count` points in the box that
/// satisfy the membership formula (exact membership on the rational lift of
/// each double point). Throws if acceptance falls below 1e-4 after 1e6 draws.
SampleSet sample_region(const Formula& membership,
                        const std::vector<std::pair<double, double>>& box, size_t count,
                        uint64_t seed);

/// Attach per-point value pairs (e.g. (|f|, |g|) or (psi, dist)).
void annotate_values(SampleSet& samples, const Evaluator& first, const Evaluator& second);

struct ExponentEstimate {
    double exponent = 0;
    double intercept = 0;       // log of the fitted constant
    double r_squared = 0;
    size_t sample_count = 0;
    std::pair<double, double> window{0, 0};
    bool low_confidence = false;
};

/// Slope of log|f(x(t))| against log|g(x(t))| for t sampled geometrically in
/// [t_max 10^-decades, t_max]; a lower witness for the Lojasiewicz exponent.
ExponentEstimate estimate_loja_on_curve(const Evaluator& f, const Evaluator& g,
                                        const CurveSpec& curve, double t_max, unsigned decades,
                                        unsigned samples_per_decade);

/// Upper-envelope fit of log|f| against log|g| over the sample cloud,
/// restricted to 0 < |g| < g_ceiling; fits the top 5% ratio points.
ExponentEstimate estimate_loja_cloud(const SampleSet& samples, double g_ceiling);

struct EnvelopeRow {
    double eps;
    double phi;
    size_t support_count;
};

struct EnvelopeTable {
    std::vector<EnvelopeRow> rows;   // eps strictly increasing
};

/// Geometric eps-bins over the observed psi range; phi is the max dist per
/// bin. Sample values must carry (psi, dist) pairs.
EnvelopeTable envelope(const SampleSet& samples, size_t bins);

/// gamma_1 from the small-eps half of the table; returns rho = 1/gamma_1 and
/// the fitted constant. Throws when the fitted slope is not positive.
ExponentEstimate estimate_error_exponent(const EnvelopeTable& table);

/// Distance evaluator with its provenance: exact for a finite point set or a
/// univariate formula, nearest-neighbor against a pre-sampled cloud
/// otherwise, with the cloud resolution on record.
struct DistEvaluator {
    Evaluator eval;
    std::string kind;            // "finite-exact", "1d-exact", "cloud-nn"
    size_t cloud_size = 0;       // cloud-nn only
    double cloud_spacing = 0;    // crude per-axis resolution of the cloud
};

class PointSet;   // distance.hpp
class Formula;

DistEvaluator dist_evaluator_finite(const std::vector<std::vector<Rational>>& points);
DistEvaluator dist_evaluator_1d(const Formula& phi);
DistEvaluator dist_evaluator_cloud(const Formula& membership,
                                   const std::vector<std::pair<double, double>>& box,
                                   size_t count, uint64_t seed);

/// Smallest positive slope of the lower Newton polygon of P(eps, y): the
/// leading exponent of a Puiseux branch y(eps) vanishing at 0. Exact.
Rational newton_min_exponent(const Polynomial& p);

/// Built-in instance of the near-tight example: f, g and the witness curve
/// for the given degree d >= 2 and dimension n >= 1. On the witness curve the
/// middle terms of f cancel exactly, which double arithmetic destroys once
/// d^n outruns the mantissa; estimate() therefore evaluates the curve, f and
/// g^2 in exact rationals and fits in the log domain.
struct PaperExample {
    Evaluator f;
    Evaluator g;
    CurveSpec curve;
    unsigned d, n;

    ExponentEstimate estimate(double t_max, unsigned decades, unsigned samples_per_decade) const;

    /// Exact values along the curve at rational parameter t.
    Rational f_on_curve(const Rational& t) const;
    Rational g_squared_on_curve(const Rational& t) const;
};

PaperExample make_paper_example(unsigned d, unsigned n);

}   // namespace semialg
