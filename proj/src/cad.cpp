#include "semialg/cad.hpp"

#include "semialg/resultant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace semialg {

namespace {

// canonical form for dedup: monic in the graded-lex leading coefficient
Polynomial monic_normal(const Polynomial& p) {
    if (p.is_zero()) return p;
    const Rational& lead = p.terms().rbegin()->second;
    return p * (Rational(1) / lead);
}

std::string poly_key(const Polynomial& p) {
    std::vector<std::string> vars;
    for (unsigned i = 0; i < p.arity(); ++i) vars.push_back("v" + std::to_string(i));
    return p.to_string(vars);
}

// pairwise-coprime square-free basis (wrt X2) of primitive square-free parts
std::vector<Polynomial> gcd_free_basis(std::vector<Polynomial> parts) {
    auto canon = [](Polynomial p) { return monic_normal(p); };
    for (auto& p : parts) p = canon(p);
    // dedupe
    std::sort(parts.begin(), parts.end(),
              [](const Polynomial& a, const Polynomial& b) { return poly_key(a) < poly_key(b); });
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < parts.size() && !changed; ++i) {
            for (size_t j = i + 1; j < parts.size() && !changed; ++j) {
                Polynomial g = gcd_wrt_last_2d(parts[i], parts[j]);
                auto dg = g.degree_in(1);
                if (!dg || *dg == 0) continue;
                Polynomial gi = canon(exact_div(parts[i], g));
                Polynomial gj = canon(exact_div(parts[j], g));
                Polynomial gc = canon(g);
                std::vector<Polynomial> next;
                for (size_t k = 0; k < parts.size(); ++k) {
                    if (k != i && k != j) next.push_back(parts[k]);
                }
                auto push_part = [&](const Polynomial& p) {
                    auto dp = p.degree_in(1);
                    if (dp && *dp >= 1) next.push_back(p);
                };
                push_part(gc);
                push_part(gi);
                push_part(gj);
                std::sort(next.begin(), next.end(), [](const Polynomial& a, const Polynomial& b) {
                    return poly_key(a) < poly_key(b);
                });
                next.erase(std::unique(next.begin(), next.end()), next.end());
                parts = std::move(next);
                changed = true;
            }
        }
    }
    return parts;
}

}   // namespace

std::vector<Polynomial> project2d(const std::vector<Polynomial>& family) {
    if (family.empty()) throw std::invalid_argument("project2d: empty family");
    std::vector<UPoly> collected;

    auto add = [&](const UPoly& u) {
        if (up::degree(u) >= 1) collected.push_back(u);
    };

    std::vector<Polynomial> sf_parts;
    for (const auto& f : family) {
        if (f.arity() != 2) throw std::invalid_argument("project2d: family must have arity 2");
        if (f.is_zero()) throw std::invalid_argument("project2d: zero family member");
        auto dy = f.degree_in(1);
        if (*dy == 0) {
            add(up::from_polynomial(f.drop_variable(1)));
            continue;
        }
        add(content_wrt_last_2d(f));
        sf_parts.push_back(squarefree_part_wrt_last(f));
    }

    std::vector<Polynomial> basis = gcd_free_basis(std::move(sf_parts));
    for (const auto& b : basis) {
        unsigned dy = *b.degree_in(1);
        add(up::from_polynomial(b.coeff_wrt(1, dy).drop_variable(1)));
        Polynomial trailing = b.coeff_wrt(1, 0);
        if (!trailing.is_zero()) add(up::from_polynomial(trailing.drop_variable(1)));
        if (dy >= 2) add(up::from_polynomial(discriminant_wrt_last(b)));
    }
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
            add(up::from_polynomial(resultant_wrt_last(basis[i], basis[j])));
        }
    }

    // monic, dedupe, deterministic order
    std::vector<Polynomial> out;
    for (auto& u : collected) {
        Rational inv = Rational(1) / u.back();
        for (auto& c : u) c *= inv;
        out.push_back(up::to_polynomial(u));
    }
    std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
        auto ka = poly_key(a), kb = poly_key(b);
        auto da = a.total_degree(), db = b.total_degree();
        if (*da != *db) return *da < *db;
        return ka < kb;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::shared_ptr<const FiberLine> line_for_base_cell(const Cell1& cell) {
    if (cell.is_point) {
        return std::make_shared<FiberLine>(*cell.point);
    }
    return std::make_shared<FiberLine>(FiberLine::at_rational(*cell.sample));
}

}   // namespace

size_t CylDecomp::cell_count() const {
    size_t n = 0;
    for (const auto& s : stacks) n += s.size();
    return n;
}

CylDecomp cad2d(const std::vector<Polynomial>& family) {
    CylDecomp out;
    out.family = family;
    out.projection = project2d(family);
    out.base = realizable_sign_conditions_1d(out.projection);

    for (size_t bi = 0; bi < out.base.size(); ++bi) {
        const Cell1& cell = out.base[bi];
        FiberStack fb(line_for_base_cell(cell), family);
        double x_approx = cell.is_point ? cell.point->approx(1e-9) : to_double(*cell.sample);

        std::vector<CadCell> stack;
        size_t m = fb.root_count();
        std::vector<Rational> samples = fb.sector_samples();
        for (size_t k = 0; k <= m; ++k) {
            CadCell sector;
            sector.base_index = bi;
            sector.stack_index = stack.size();
            sector.is_section = false;
            sector.x_approx = x_approx;
            sector.y_approx = to_double(samples[k]);
            for (size_t mem = 0; mem < family.size(); ++mem) {
                sector.signs.push_back(fb.member_sign_at(mem, samples[k]));
            }
            stack.push_back(std::move(sector));
            if (k < m) {
                CadCell section;
                section.base_index = bi;
                section.stack_index = stack.size();
                section.is_section = true;
                section.x_approx = x_approx;
                section.y_approx = fb.root_approx(k, 1e-9);
                for (size_t mem = 0; mem < family.size(); ++mem) {
                    section.signs.push_back(fb.member_sign_at_root(mem, k));
                }
                stack.push_back(std::move(section));
            }
        }
        out.stacks.push_back(std::move(stack));
    }
    return out;
}

std::pair<size_t, size_t> CylDecomp::locate(const Rational& x, const Rational& y) const {
    // base cell
    size_t bi = base.size() - 1;
    for (size_t i = 0; i < base.size(); ++i) {
        if (!base[i].is_point) continue;
        int c = base[i].point->compare(x);
        if (c == 0) {
            bi = i;
            break;
        }
        if (c > 0) {
            bi = i - 1;
            break;
        }
    }

    FiberStack fb(std::make_shared<FiberLine>(FiberLine::at_rational(x)), family);
    size_t sections_here = fb.root_count();
    size_t sections_stack = (stacks[bi].size() - 1) / 2;
    if (sections_here != sections_stack) {
        throw std::logic_error("CylDecomp::locate: fiber root count differs from the stack");
    }

    size_t below = 0;
    for (size_t k = 0; k < fb.root_count(); ++k) {
        int cmp = fb.compare_root(k, y);
        if (cmp < 0) {
            ++below;
        } else if (cmp == 0) {
            return {bi, 2 * below + 1};
        } else {
            break;
        }
    }
    return {bi, 2 * below};
}

namespace {

Rational clamp_unit(double t) {
    Rational q = rational_from_double(t);
    Rational lo = make_rational(1, 16), hi = make_rational(15, 16);
    if (q < lo) return lo;
    if (q > hi) return hi;
    return q;
}

}   // namespace

std::vector<int> CylDecomp::probe_cell(size_t base_index, size_t stack_index, double t1,
                                       double t2) const {
    if (base_index >= base.size()) throw std::out_of_range("probe_cell: bad base index");
    if (stack_index >= stacks[base_index].size())
        throw std::out_of_range("probe_cell: bad stack index");
    const Cell1& bcell = base[base_index];

    // choose the vertical line inside the base cell
    std::shared_ptr<const FiberLine> line;
    if (bcell.is_point) {
        line = line_for_base_cell(bcell);
    } else {
        Rational t = clamp_unit(t1);
        const IsolatingInterval* left =
            base_index > 0 ? &*base[base_index - 1].point : nullptr;
        const IsolatingInterval* right =
            base_index + 1 < base.size() ? &*base[base_index + 1].point : nullptr;
        Rational x;
        const Rational& anchor = *bcell.sample;
        if (left) {
            while (!(left->high() < anchor)) left->refine();
        }
        if (right) {
            while (!(right->low() > anchor)) right->refine();
        }
        if (left && right) {
            x = left->high() + t * (right->low() - left->high());
        } else if (left) {
            x = left->high() + t * (anchor + 2 - left->high());
        } else if (right) {
            x = right->low() - t * (right->low() - (anchor - 2));
        } else {
            x = anchor - 2 + t * 4;
        }
        line = std::make_shared<FiberLine>(FiberLine::at_rational(x));
    }

    FiberStack fb(line, family);
    size_t sections_stack = (stacks[base_index].size() - 1) / 2;
    if (fb.root_count() != sections_stack) {
        throw std::logic_error("probe_cell: fiber root count differs from the stack");
    }

    std::vector<int> signs;
    if (stack_index % 2 == 1) {
        size_t k = stack_index / 2;
        for (size_t mem = 0; mem < family.size(); ++mem) {
            signs.push_back(fb.member_sign_at_root(mem, k));
        }
        return signs;
    }

    // sector: pick y strictly inside the band selected by t2
    size_t k = stack_index / 2;
    Rational t = clamp_unit(t2);
    Rational y;
    if (fb.root_count() == 0) {
        y = Rational(-2) + t * 4;
    } else if (k == 0) {
        const auto& r = fb.root(0);
        y = r.low() - t * 2 - make_rational(1, 1024);
    } else if (k == fb.root_count()) {
        const auto& r = fb.root(k - 1);
        y = r.high() + t * 2 + make_rational(1, 1024);
    } else {
        const auto& a = fb.root(k - 1);
        const auto& b = fb.root(k);
        while (!(a.high() < b.low())) {
            a.refine();
            b.refine();
            if (a.high() == b.low() && !a.is_exact() && !b.is_exact()) break;
        }
        y = a.high() + t * (b.low() - a.high());
        if (y <= a.high() && a.is_exact()) y = a.high() + (b.low() - a.high()) / 2;
    }
    for (size_t mem = 0; mem < family.size(); ++mem) {
        signs.push_back(fb.member_sign_at(mem, y));
    }
    return signs;
}

GrowthReport growth_check(const std::vector<Polynomial>& family, const Formula& selector,
                          unsigned p, const std::pair<Rational, Rational>& window,
                          unsigned samples) {
    if (p < 1) throw std::invalid_argument("growth_check: requires p >= 1");
    if (!(window.first > 0) || !(window.second > window.first))
        throw std::invalid_argument("growth_check: window must satisfy 0 < lo < hi");
    if (selector.arity() != 2) throw std::invalid_argument("growth_check: selector arity must be 2");
    std::vector<Polynomial> atoms = selector.atom_polynomials();

    std::vector<double> logx, logf;
    Rational x = window.first;
    unsigned used = 0;
    while (x <= window.second && used < samples) {
        FiberStack fb(std::make_shared<FiberLine>(FiberLine::at_rational(x)), family);
        // find the unique root where the selector holds
        std::optional<size_t> graph_root;
        for (size_t k = 0; k < fb.root_count(); ++k) {
            std::vector<int> atom_signs;
            atom_signs.reserve(atoms.size());
            for (const auto& a : atoms) {
                atom_signs.push_back(fb.sign_at_root(a, k));
            }
            if (selector.eval_with_signs(atom_signs)) {
                if (graph_root)
                    throw std::invalid_argument(
                        "growth_check: selector picks more than one point above a sample");
                graph_root = k;
            }
        }
        if (!graph_root)
            throw std::invalid_argument("growth_check: no graph point found above a sample");

        const FiberRoot& r = fb.root(*graph_root);
        // refine to relative precision before taking |f(x)|
        for (;;) {
            Rational span = abs_rational(r.low()) + abs_rational(r.high()) + 1;
            if (r.is_exact() || (r.high() - r.low()) * Rational(1000000000) < span) break;
            r.refine();
        }
        double fval = std::abs(to_double((r.low() + r.high()) / 2));
        if (fval > 0.0) {
            logx.push_back(std::log(to_double(x)));
            logf.push_back(std::log(fval));
        }
        ++used;
        x *= 2;
    }

    GrowthReport rep;
    rep.window = {to_double(window.first), to_double(window.second)};
    rep.claimed_p = p;
    rep.samples_used = logx.size();
    if (logx.size() < 2) {
        rep.fitted_exponent = 0.0;
    } else {
        double mx = 0, my = 0;
        for (size_t i = 0; i < logx.size(); ++i) {
            mx += logx[i];
            my += logf[i];
        }
        mx /= logx.size();
        my /= logf.size();
        double sxx = 0, sxy = 0;
        for (size_t i = 0; i < logx.size(); ++i) {
            sxx += (logx[i] - mx) * (logx[i] - mx);
            sxy += (logx[i] - mx) * (logf[i] - my);
        }
        rep.fitted_exponent = sxy / sxx;
    }
    rep.pass = rep.fitted_exponent <= static_cast<double>(p) + 0.1;
    return rep;
}

}   // namespace semialg
