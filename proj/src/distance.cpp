#include "semialg/distance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace semialg {

PointSet::PointSet(std::vector<std::vector<Rational>> pts) : points(std::move(pts)) {
    if (points.empty()) throw std::invalid_argument("PointSet: empty");
    size_t n = points.front().size();
    for (const auto& p : points) {
        if (p.size() != n) throw std::invalid_argument("PointSet: mixed arities");
    }
    for (size_t i = 0; i < points.size(); ++i) {
        for (size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j])
                throw std::invalid_argument("PointSet: coincident points are rejected");
        }
    }
}

Formula dist_formula_finite(const PointSet& m) {
    unsigned n = m.arity();
    unsigned arity = n + 1;   // (X1..Xn, T)
    Polynomial t = Polynomial::variable(arity, n);
    Polynomial t2 = t * t;

    // T is the distance to the nearest point: T^2 is below every |X-p_i|^2
    // and attains one of them
    std::vector<Formula> at_most;     // |X-p|^2 - T^2 >= 0
    std::vector<Formula> attained;    // |X-p|^2 - T^2 = 0
    for (const auto& p : m.points) {
        Polynomial dist2(arity);
        for (unsigned i = 0; i < n; ++i) {
            Polynomial diff = Polynomial::variable(arity, i) - Polynomial::constant(arity, p[i]);
            dist2 = dist2 + diff * diff;
        }
        Polynomial gap = dist2 - t2;
        at_most.push_back(Formula::atom(gap, Rel::Ge0));
        attained.push_back(Formula::atom(gap, Rel::Eq0));
    }
    return Formula::conjunction({Formula::atom(t, Rel::Ge0),
                                 Formula::conjunction(std::move(at_most)),
                                 Formula::disjunction(std::move(attained))});
}

FiniteDistance dist_to_finite(const PointSet& m, const std::vector<Rational>& x) {
    if (x.size() != m.arity()) throw std::invalid_argument("dist_to_finite: arity mismatch");
    bool first = true;
    Rational best(0);
    for (const auto& p : m.points) {
        Rational d2(0);
        for (size_t i = 0; i < x.size(); ++i) {
            Rational diff = x[i] - p[i];
            d2 += diff * diff;
        }
        if (first || d2 < best) best = d2;
        first = false;
    }
    return FiniteDistance{best, std::sqrt(to_double(best))};
}

double AlgebraicDistance::approx(double width) const {
    double r = root.approx(width);
    return std::abs(r - to_double(offset));
}

double Dist1Result::approx(double width) const {
    if (std::holds_alternative<Rational>(value)) {
        return std::abs(to_double(std::get<Rational>(value)));
    }
    return std::get<AlgebraicDistance>(value).approx(width);
}

bool Dist1Result::is_zero() const {
    return std::holds_alternative<Rational>(value) && std::get<Rational>(value) == 0;
}

namespace {

// A(c - t) for rational c, as a polynomial in t.
UPoly compose_reflect(const UPoly& a, const Rational& c) {
    UPoly acc;                                    // evaluates A via Horner in (c - t)
    UPoly lin = {c, Rational(-1)};
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        acc = up::add(up::mul(acc, lin), up::constant(*it));
    }
    return acc;
}

}   // namespace

Dist1Result dist_1d(const Formula& phi, const Rational& x) {
    if (phi.arity() != 1) throw std::invalid_argument("dist_1d: formula must be univariate");
    std::vector<Polynomial> atoms = phi.atom_polynomials();

    // zero atom polynomials contribute a constant sign; keep the family nonzero
    std::vector<Polynomial> family;
    std::vector<ptrdiff_t> family_index(atoms.size(), -1);
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (!atoms[i].is_zero()) {
            family_index[i] = static_cast<ptrdiff_t>(family.size());
            family.push_back(atoms[i]);
        }
    }

    Dist1Result out{Rational(0), 0, realizable_sign_conditions_1d(family)};
    const auto& cells = out.cells;

    auto cell_selected = [&](const Cell1& cell) {
        std::vector<int> atom_signs(atoms.size(), 0);
        for (size_t i = 0; i < atoms.size(); ++i) {
            if (family_index[i] >= 0) atom_signs[i] = cell.signs[family_index[i]];
        }
        return phi.eval_with_signs(atom_signs);
    };

    std::vector<bool> in_s(cells.size());
    bool any = false;
    for (size_t i = 0; i < cells.size(); ++i) {
        in_s[i] = cell_selected(cells[i]);
        any = any || in_s[i];
    }
    if (!any) throw std::invalid_argument("dist_1d: the set is empty");

    // closedness: a selected interval cell must have its finite endpoints selected
    for (size_t i = 0; i < cells.size(); ++i) {
        if (!in_s[i] || cells[i].is_point) continue;
        if (i > 0 && !in_s[i - 1])
            throw std::invalid_argument("dist_1d: the set is not closed");
        if (i + 1 < cells.size() && !in_s[i + 1])
            throw std::invalid_argument("dist_1d: the set is not closed");
    }

    // locate x
    size_t x_cell = cells.size() - 1;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].is_point) {
            int c = cells[i].point->compare(x);    // root vs x
            if (c == 0) {
                x_cell = i;
                break;
            }
            if (c > 0) {                           // root > x: x lies in the cell before
                x_cell = i - 1;
                break;
            }
        }
    }
    if (in_s[x_cell]) {
        out.value = Rational(0);
        out.witness_cell = x_cell;
        return out;
    }

    // nearest selected root on each side
    std::optional<size_t> left, right;
    for (size_t i = x_cell; i-- > 0;) {
        if (cells[i].is_point && in_s[i]) {
            left = i;
            break;
        }
    }
    for (size_t i = x_cell + 1; i < cells.size(); ++i) {
        if (cells[i].is_point && in_s[i]) {
            right = i;
            break;
        }
    }

    auto make_value = [&](size_t cell_idx) {
        const IsolatingInterval& r = *cells[cell_idx].point;
        out.witness_cell = cell_idx;
        if (r.is_exact()) {
            out.value = abs_rational(r.low() - x);
        } else {
            out.value = AlgebraicDistance{r, x};
        }
    };

    if (left && !right) {
        make_value(*left);
        return out;
    }
    if (right && !left) {
        make_value(*right);
        return out;
    }
    if (!left && !right) throw std::logic_error("dist_1d: no boundary root found");

    // both sides: compare x - r_left against r_right - x exactly.
    const IsolatingInterval& rl = *cells[*left].point;
    const IsolatingInterval& rr = *cells[*right].point;
    // mirror of the left root across x is a root of A_left(2x - t)
    UPoly mirrored = compose_reflect(rl.polynomial(), 2 * x);
    auto ctx = std::make_shared<SturmContext>(up::squarefree_part(mirrored));
    IsolatingInterval mirror(ctx, 2 * x - rl.high(), 2 * x - rl.low());
    int cmp = mirror.compare(rr);   // mirror < rr  =>  left distance smaller
    make_value(cmp <= 0 ? *left : *right);
    return out;
}

}   // namespace semialg
