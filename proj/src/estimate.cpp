#include "semialg/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace semialg {

uint64_t mix_seed(uint64_t seed, uint64_t index) {
    // splitmix64 over the combined word
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform01(uint64_t seed, uint64_t index) {
    return static_cast<double>(mix_seed(seed, index) >> 11) * 0x1.0p-53;
}

std::vector<double> CurveSpec::at(double t) const {
    std::vector<double> x;
    x.reserve(components.size());
    for (const auto& c : components) x.push_back(up::eval_double(c, t));
    return x;
}

SampleSet sample_region(const Formula& membership,
                        const std::vector<std::pair<double, double>>& box, size_t count,
                        uint64_t seed) {
    if (box.empty()) throw std::invalid_argument("sample_region: empty box");
    if (membership.arity() != box.size())
        throw std::invalid_argument("sample_region: box arity mismatch");
    if (count == 0) throw std::invalid_argument("sample_region: count must be >= 1");
    for (const auto& [lo, hi] : box) {
        if (!(lo < hi)) throw std::invalid_argument("sample_region: degenerate box side");
    }

    SampleSet out;
    out.seed = seed;
    const uint64_t max_trials = 1000000;
    uint64_t trials = 0, draw = 0;
    while (out.points.size() < count) {
        if (trials >= max_trials &&
            static_cast<double>(out.points.size()) < 1e-4 * static_cast<double>(trials)) {
            throw std::runtime_error("sample_region: acceptance ratio below 1e-4");
        }
        std::vector<double> pt(box.size());
        std::vector<Rational> pt_exact(box.size());
        for (size_t i = 0; i < box.size(); ++i) {
            double u = uniform01(seed, draw++);
            pt[i] = box[i].first + u * (box[i].second - box[i].first);
            pt_exact[i] = rational_from_double(pt[i]);
        }
        ++trials;
        if (membership.eval(pt_exact)) out.points.push_back(std::move(pt));
    }
    out.acceptance_ratio = static_cast<double>(out.points.size()) / static_cast<double>(trials);
    return out;
}

void annotate_values(SampleSet& samples, const Evaluator& first, const Evaluator& second) {
    samples.values.clear();
    samples.values.reserve(samples.points.size());
    for (const auto& p : samples.points) {
        samples.values.emplace_back(first(p), second(p));
    }
}

namespace {

struct Fit {
    double slope, intercept, r_squared;
};

Fit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
    double mx = 0, my = 0;
    size_t n = xs.size();
    for (size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    Fit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r_squared = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return f;
}

}   // namespace

ExponentEstimate estimate_loja_on_curve(const Evaluator& f, const Evaluator& g,
                                        const CurveSpec& curve, double t_max, unsigned decades,
                                        unsigned samples_per_decade) {
    if (!(t_max > 0)) throw std::invalid_argument("estimate_loja_on_curve: t_max must be > 0");
    if (decades == 0 || samples_per_decade == 0)
        throw std::invalid_argument("estimate_loja_on_curve: needs at least one decade and sample");
    size_t total = static_cast<size_t>(decades) * samples_per_decade;
    std::vector<double> logg, logf;
    double t_lo = t_max;
    for (size_t i = 0; i < total; ++i) {
        double frac = total == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(total - 1);
        double t = t_max * std::pow(10.0, -static_cast<double>(decades) * frac);
        t_lo = t;
        std::vector<double> x = curve.at(t);
        double fv = std::abs(f(x)), gv = std::abs(g(x));
        if (fv > 0 && gv > 0) {
            logf.push_back(std::log(fv));
            logg.push_back(std::log(gv));
        }
    }
    if (logf.size() < 8)
        throw std::runtime_error("estimate_loja_on_curve: fewer than 8 usable samples");
    Fit fit = least_squares(logg, logf);
    ExponentEstimate est;
    est.exponent = fit.slope;
    est.intercept = -fit.intercept;   // |g|^N <= c|f|: log c = -intercept of logf on logg
    est.r_squared = fit.r_squared;
    est.sample_count = logf.size();
    est.window = {t_lo, t_max};
    est.low_confidence = fit.r_squared < 0.99;
    return est;
}

ExponentEstimate estimate_loja_cloud(const SampleSet& samples, double g_ceiling) {
    if (!(g_ceiling < 1.0 && g_ceiling > 0.0))
        throw std::invalid_argument("estimate_loja_cloud: g_ceiling must lie in (0,1)");
    if (samples.values.size() != samples.points.size())
        throw std::invalid_argument("estimate_loja_cloud: samples carry no values");

    struct Pt {
        double logf, logg, ratio;
    };
    std::vector<Pt> pts;
    for (const auto& [fv0, gv0] : samples.values) {
        double fv = std::abs(fv0), gv = std::abs(gv0);
        if (fv > 0 && gv > 0 && gv < g_ceiling) {
            Pt p{std::log(fv), std::log(gv), 0};
            p.ratio = p.logf / p.logg;
            pts.push_back(p);
        }
    }
    if (pts.size() < 8) throw std::runtime_error("estimate_loja_cloud: insufficient filtered samples");

    // envelope points: the top 5% by exponent ratio
    size_t keep = std::max<size_t>(8, pts.size() / 20);
    keep = std::min(keep, pts.size());
    std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return a.ratio > b.ratio; });
    std::vector<double> xs, ys;
    double gmin = 0, gmax = 0;
    for (size_t i = 0; i < keep; ++i) {
        xs.push_back(pts[i].logg);
        ys.push_back(pts[i].logf);
        gmin = std::min(gmin, pts[i].logg);
        gmax = std::max(gmax, pts[i].logg);
    }
    Fit fit = least_squares(xs, ys);
    ExponentEstimate est;
    est.exponent = fit.slope;
    est.intercept = -fit.intercept;
    est.r_squared = fit.r_squared;
    est.sample_count = keep;
    est.window = {std::exp(gmin), std::exp(gmax)};
    est.low_confidence = fit.r_squared < 0.99;
    return est;
}

EnvelopeTable envelope(const SampleSet& samples, size_t bins) {
    if (bins < 8) throw std::invalid_argument("envelope: needs at least 8 bins");
    if (samples.values.size() != samples.points.size() || samples.values.empty())
        throw std::invalid_argument("envelope: samples carry no (psi, dist) values");

    double psi_min = 0, psi_max = 0;
    bool first = true;
    for (const auto& [psi, dist] : samples.values) {
        if (psi <= 0) continue;
        if (first || psi < psi_min) psi_min = psi;
        if (first || psi > psi_max) psi_max = psi;
        first = false;
    }
    if (first || !(psi_max > psi_min))
        throw std::runtime_error("envelope: degenerate psi range");

    double ratio = psi_max / psi_min;
    EnvelopeTable table;
    std::vector<double> best(bins, -1.0);
    std::vector<size_t> count(bins, 0);
    for (const auto& [psi, dist] : samples.values) {
        if (psi <= 0) continue;
        double frac = std::log(psi / psi_min) / std::log(ratio);
        size_t b = std::min(bins - 1, static_cast<size_t>(frac * static_cast<double>(bins)));
        best[b] = std::max(best[b], dist);
        count[b] += 1;
    }
    for (size_t b = 0; b < bins; ++b) {
        if (count[b] == 0) continue;
        double lo = psi_min * std::pow(ratio, static_cast<double>(b) / static_cast<double>(bins));
        double hi = psi_min * std::pow(ratio, static_cast<double>(b + 1) / static_cast<double>(bins));
        table.rows.push_back(EnvelopeRow{std::sqrt(lo * hi), best[b], count[b]});
    }
    if (table.rows.size() < 8) throw std::runtime_error("envelope: fewer than 8 nonempty bins");
    return table;
}

ExponentEstimate estimate_error_exponent(const EnvelopeTable& table) {
    if (table.rows.size() < 4)
        throw std::invalid_argument("estimate_error_exponent: table too short");
    size_t half = std::max<size_t>(table.rows.size() / 2, 4);
    half = std::min(half, table.rows.size());

    std::vector<double> xs, ys;
    bool monotone = true;
    for (size_t i = 0; i < half; ++i) {
        const auto& row = table.rows[i];
        if (!(row.eps > 0) || !(row.phi > 0)) continue;
        if (i + 1 < half && table.rows[i + 1].phi < row.phi * 0.5) monotone = false;
        xs.push_back(std::log(row.eps));
        ys.push_back(std::log(row.phi));
    }
    if (xs.size() < 2) throw std::runtime_error("estimate_error_exponent: too few usable rows");
    Fit fit = least_squares(xs, ys);
    if (!(fit.slope > 0)) throw std::runtime_error("estimate_error_exponent: fitted slope <= 0");
    ExponentEstimate est;
    est.exponent = 1.0 / fit.slope;                 // rho = 1/gamma_1
    est.intercept = fit.intercept / fit.slope;      // log kappa
    est.r_squared = fit.r_squared;
    est.sample_count = xs.size();
    est.window = {std::exp(xs.front()), std::exp(xs.back())};
    est.low_confidence = !monotone || fit.r_squared < 0.99;
    return est;
}

DistEvaluator dist_evaluator_finite(const std::vector<std::vector<Rational>>& points) {
    if (points.empty()) throw std::invalid_argument("dist_evaluator_finite: empty set");
    std::vector<std::vector<double>> pts;
    pts.reserve(points.size());
    for (const auto& p : points) {
        std::vector<double> q;
        for (const auto& c : p) q.push_back(to_double(c));
        pts.push_back(std::move(q));
    }
    DistEvaluator out;
    out.kind = "finite-exact";
    out.eval = [pts](const std::vector<double>& x) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& p : pts) {
            double d2 = 0;
            for (size_t i = 0; i < x.size(); ++i) d2 += (x[i] - p[i]) * (x[i] - p[i]);
            best = std::min(best, d2);
        }
        return std::sqrt(best);
    };
    return out;
}

DistEvaluator dist_evaluator_1d(const Formula& phi) {
    if (phi.arity() != 1) throw std::invalid_argument("dist_evaluator_1d: formula must be univariate");
    auto shared = std::make_shared<Formula>(phi);
    DistEvaluator out;
    out.kind = "1d-exact";
    out.eval = [shared](const std::vector<double>& x) {
        Dist1Result r = dist_1d(*shared, rational_from_double(x[0]));
        return r.approx(1e-12);
    };
    return out;
}

DistEvaluator dist_evaluator_cloud(const Formula& membership,
                                   const std::vector<std::pair<double, double>>& box,
                                   size_t count, uint64_t seed) {
    SampleSet cloud = sample_region(membership, box, count, seed);
    DistEvaluator out;
    out.kind = "cloud-nn";
    out.cloud_size = cloud.points.size();
    double volume = 1.0;
    for (const auto& [lo, hi] : box) volume *= (hi - lo);
    // crude per-axis spacing of an accepted-point grid of the same density
    out.cloud_spacing = std::pow(volume * cloud.acceptance_ratio /
                                     static_cast<double>(cloud.points.size()),
                                 1.0 / static_cast<double>(box.size()));
    auto pts = std::make_shared<std::vector<std::vector<double>>>(std::move(cloud.points));
    out.eval = [pts](const std::vector<double>& x) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& p : *pts) {
            double d2 = 0;
            for (size_t i = 0; i < x.size(); ++i) d2 += (x[i] - p[i]) * (x[i] - p[i]);
            best = std::min(best, d2);
        }
        return std::sqrt(best);
    };
    return out;
}

Rational newton_min_exponent(const Polynomial& p) {
    if (p.arity() != 2) throw std::invalid_argument("newton_min_exponent: arity must be 2");
    if (p.is_zero()) throw std::invalid_argument("newton_min_exponent: zero polynomial");

    // support as (j, i): j the y-exponent, i the smallest eps-exponent seen
    std::map<unsigned, unsigned> min_eps;
    bool eps_free_term = false;
    for (const auto& [m, c] : p.terms()) {
        unsigned i = m[0], j = m[1];
        if (i == 0) eps_free_term = true;
        auto it = min_eps.find(j);
        if (it == min_eps.end() || i < it->second) min_eps[j] = i;
    }
    if (!eps_free_term)
        throw std::invalid_argument("newton_min_exponent: P(0, y) is identically zero");

    std::vector<std::pair<long, long>> pts;   // (j, i) sorted by j
    for (const auto& [j, i] : min_eps) pts.emplace_back(static_cast<long>(j), static_cast<long>(i));

    // lower convex hull over increasing j (Andrew monotone chain)
    std::vector<std::pair<long, long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            long cross = (b.first - a.first) * (pt.second - a.second) -
                         (b.second - a.second) * (pt.first - a.first);
            if (cross <= 0) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(pt);
    }

    bool found = false;
    Rational best;
    for (size_t k = 0; k + 1 < hull.size(); ++k) {
        long dj = hull[k + 1].first - hull[k].first;
        long di = hull[k].second - hull[k + 1].second;
        if (dj > 0 && di > 0) {
            Rational gamma = make_rational(Int(di), Int(dj));
            if (!found || gamma < best) {
                best = gamma;
                found = true;
            }
        }
    }
    if (!found)
        throw std::runtime_error("newton_min_exponent: no vanishing branch (no positive-slope segment)");
    return best;
}

Rational PaperExample::f_on_curve(const Rational& t) const {
    std::vector<Rational> x;
    x.reserve(n);
    unsigned long e = 1;
    for (unsigned i = 0; i < n; ++i) {
        x.push_back(pow_rational(t, e));
        e *= d;
    }
    Rational acc(0);
    for (unsigned i = 0; i + 1 < n; ++i) {
        acc += abs_rational(x[i + 1] - pow_rational(x[i], d));
    }
    acc += abs_rational(pow_rational(x[n - 1], d));
    return acc;
}

Rational PaperExample::g_squared_on_curve(const Rational& t) const {
    Rational acc(0);
    unsigned long e = 1;
    for (unsigned i = 0; i < n; ++i) {
        Rational xi = pow_rational(t, e);
        acc += xi * xi;
        e *= d;
    }
    return acc;
}

ExponentEstimate PaperExample::estimate(double t_max, unsigned decades,
                                        unsigned samples_per_decade) const {
    if (!(t_max > 0)) throw std::invalid_argument("PaperExample::estimate: t_max must be > 0");
    size_t total = static_cast<size_t>(decades) * samples_per_decade;
    if (total < 8) throw std::invalid_argument("PaperExample::estimate: too few samples");
    std::vector<double> logg, logf;
    double t_lo = t_max;
    for (size_t i = 0; i < total; ++i) {
        double frac = total == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(total - 1);
        double td = t_max * std::pow(10.0, -static_cast<double>(decades) * frac);
        t_lo = td;
        Rational t = rational_from_double(td);
        Rational fv = f_on_curve(t);
        Rational g2 = g_squared_on_curve(t);
        if (fv == 0 || g2 == 0) continue;
        logf.push_back(log_rational_abs(fv));
        logg.push_back(0.5 * log_rational_abs(g2));
    }
    if (logf.size() < 8)
        throw std::runtime_error("PaperExample::estimate: fewer than 8 usable samples");
    Fit fit = least_squares(logg, logf);
    ExponentEstimate est;
    est.exponent = fit.slope;
    est.intercept = -fit.intercept;
    est.r_squared = fit.r_squared;
    est.sample_count = logf.size();
    est.window = {t_lo, t_max};
    est.low_confidence = fit.r_squared < 0.99;
    return est;
}

PaperExample make_paper_example(unsigned d, unsigned n) {
    if (d < 2) throw std::invalid_argument("make_paper_example: requires d >= 2");
    if (n < 1) throw std::invalid_argument("make_paper_example: requires n >= 1");
    PaperExample ex;
    ex.d = d;
    ex.n = n;
    ex.f = [d, n](const std::vector<double>& x) {
        double acc = 0;
        for (unsigned i = 0; i + 1 < n; ++i) {
            acc += std::abs(x[i + 1] - std::pow(x[i], static_cast<double>(d)));
        }
        acc += std::abs(std::pow(x[n - 1], static_cast<double>(d)));
        return acc;
    };
    ex.g = [n](const std::vector<double>& x) {
        double acc = 0;
        for (unsigned i = 0; i < n; ++i) acc += x[i] * x[i];
        return std::sqrt(acc);
    };
    // witness curve x(t) = (t, t^d, ..., t^{d^{n-1}})
    unsigned long e = 1;
    for (unsigned i = 0; i < n; ++i) {
        UPoly mono(static_cast<size_t>(e) + 1, Rational(0));
        mono[e] = Rational(1);
        ex.curve.components.push_back(std::move(mono));
        e *= d;
    }
    return ex;
}

}   // namespace semialg
