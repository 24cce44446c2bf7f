#include "semialg/resultant.hpp"

#include "semialg/upoly.hpp"

#include <stdexcept>

namespace semialg {

Polynomial exact_div(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw std::invalid_argument("exact_div: division by zero");
    Polynomial r = p;
    Polynomial q(p.arity());
    const auto& dlead = *d.terms().rbegin();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().rbegin();
        Monomial qm(r.arity());
        for (unsigned i = 0; i < r.arity(); ++i) {
            if (rlead.first[i] < dlead.first[i]) throw std::logic_error("exact_div: not divisible");
            qm[i] = rlead.first[i] - dlead.first[i];
        }
        Rational qc = rlead.second / dlead.second;
        Polynomial t = Polynomial::term(r.arity(), qm, qc);
        q = q + t;
        r = r - t * d;
    }
    return q;
}

namespace {

// View of a polynomial as coefficient list in its last variable.
using CoeffVec = std::vector<Polynomial>;

CoeffVec to_coeffs(const Polynomial& f) {
    unsigned last = f.arity() - 1;
    auto d = f.degree_in(last);
    CoeffVec out;
    if (!d) return out;
    out.reserve(*d + 1);
    for (unsigned k = 0; k <= *d; ++k) out.push_back(f.coeff_wrt(last, k));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

int cdeg(const CoeffVec& a) { return static_cast<int>(a.size()) - 1; }

void cnormalize(CoeffVec& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

CoeffVec cscale(const CoeffVec& a, const Polynomial& c) {
    CoeffVec r;
    r.reserve(a.size());
    for (const auto& p : a) r.push_back(p * c);
    cnormalize(r);
    return r;
}

// lc(b)^(deg a - deg b + 1) * a mod b, all in the coefficient ring.
CoeffVec pseudo_rem(const CoeffVec& a, const CoeffVec& b) {
    if (b.empty()) throw std::invalid_argument("pseudo_rem: zero divisor");
    CoeffVec r = a;
    const Polynomial& lead = b.back();
    int e = cdeg(a) - cdeg(b) + 1;
    while (!r.empty() && cdeg(r) >= cdeg(b)) {
        size_t shift = r.size() - b.size();
        Polynomial top = r.back();
        CoeffVec next(r.size() - 1);
        for (size_t i = 0; i + 1 < r.size(); ++i) {
            next[i] = r[i] * lead;
            if (i >= shift) next[i] = next[i] - top * b[i - shift];
        }
        cnormalize(next);
        r = std::move(next);
        --e;
    }
    if (e > 0) {
        Polynomial mult = lead.pow(static_cast<unsigned>(e));
        r = cscale(r, mult);
    }
    return r;
}

CoeffVec cdiv_exact(const CoeffVec& a, const Polynomial& d) {
    CoeffVec r;
    r.reserve(a.size());
    for (const auto& p : a) r.push_back(p.is_zero() ? p : exact_div(p, d));
    return r;
}

}   // namespace

Polynomial resultant_wrt_last(const Polynomial& f, const Polynomial& g) {
    if (f.arity() != g.arity() || f.arity() < 1)
        throw std::invalid_argument("resultant_wrt_last: arity mismatch");
    unsigned last = f.arity() - 1;
    auto df = f.degree_in(last), dg = g.degree_in(last);
    if (!df || *df == 0 || !dg || *dg == 0)
        throw std::invalid_argument("resultant_wrt_last: inputs must have positive degree in the last variable");

    CoeffVec a = to_coeffs(f), b = to_coeffs(g);
    unsigned arity = f.arity();
    bool negate = false;
    if (cdeg(a) < cdeg(b)) {
        std::swap(a, b);
        if ((static_cast<long>(cdeg(a)) * cdeg(b)) % 2 == 1) negate = !negate;
    }

    // Subresultant PRS, tracking res(a,b) = sign * (num / den) * res(r_i, r_{i+1}).
    Polynomial num = Polynomial::constant(arity, 1);
    Polynomial den = Polynomial::constant(arity, 1);
    Polynomial psi = Polynomial::constant(arity, -1);
    bool first_step = true;
    Polynomial result(arity);

    for (;;) {
        int da = cdeg(a), db = cdeg(b);
        if (db == 0) {
            // base case: res(a, const c) = c^{deg a}
            result = b.back().pow(static_cast<unsigned>(da));
            break;
        }
        int delta = da - db;
        CoeffVec r = pseudo_rem(a, b);
        if (r.empty()) {
            // positive-degree common divisor
            return Polynomial(arity - 1);
        }
        Polynomial beta;
        if (first_step) {
            beta = Polynomial::constant(arity, (delta + 1) % 2 == 0 ? 1 : -1);
            first_step = false;
        } else {
            // psi update for this step uses the previous step's delta
            beta = -(a.back() * psi.pow(static_cast<unsigned>(delta)));
        }
        CoeffVec next = cdiv_exact(r, beta);

        // bookkeeping: res(a,b) = (-1)^{da*db} lc(b)^{da-dc} beta^{db} / lc(b)^{(da-db+1)db} * res(b,next)
        int dc = cdeg(next);
        if ((static_cast<long>(da) * db) % 2 == 1) negate = !negate;
        num = num * b.back().pow(static_cast<unsigned>(da - dc)) *
              beta.pow(static_cast<unsigned>(db));
        den = den * b.back().pow(static_cast<unsigned>((delta + 1) * db));

        // psi for the next step: psi' = (-lc(b))^delta / psi^{delta-1}
        if (delta >= 1) {
            Polynomial neg_lead = -b.back();
            Polynomial num_psi = neg_lead.pow(static_cast<unsigned>(delta));
            psi = delta == 1 ? num_psi : exact_div(num_psi, psi.pow(static_cast<unsigned>(delta - 1)));
        }
        a = std::move(b);
        b = std::move(next);
    }

    Polynomial full = exact_div(num * result, den);
    if (negate) full = -full;
    return full.drop_variable(last);
}

Polynomial discriminant_wrt_last(const Polynomial& f) {
    unsigned last = f.arity() - 1;
    auto d = f.degree_in(last);
    if (!d || *d < 2)
        throw std::invalid_argument("discriminant_wrt_last: degree in last variable must be >= 2");
    Polynomial res = resultant_wrt_last(f, f.derivative(last));
    Polynomial lead = f.coeff_wrt(last, *d).drop_variable(last);
    Polynomial disc = exact_div(res, lead);
    unsigned long dd = *d;
    if ((dd * (dd - 1) / 2) % 2 == 1) disc = -disc;
    return disc;
}

UPoly content_wrt_last_2d(const Polynomial& f) {
    if (f.arity() != 2) throw std::invalid_argument("content_wrt_last_2d: arity must be 2");
    auto d = f.degree_in(1);
    if (!d) return {};
    UPoly content;
    for (unsigned k = 0; k <= *d; ++k) {
        content = up::gcd(content, up::from_polynomial(f.coeff_wrt(1, k).drop_variable(1)));
    }
    return content;
}

namespace {

Polynomial primitive_wrt_last_2d(const Polynomial& f) {
    UPoly content = content_wrt_last_2d(f);
    if (up::degree(content) > 0) {
        return exact_div(f, up::to_polynomial(content).insert_variable(1));
    }
    return f;
}

}   // namespace

Polynomial gcd_wrt_last_2d(const Polynomial& f, const Polynomial& g) {
    if (f.arity() != 2 || g.arity() != 2)
        throw std::invalid_argument("gcd_wrt_last_2d: arity must be 2");
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("gcd_wrt_last_2d: zero input");
    CoeffVec a = to_coeffs(primitive_wrt_last_2d(f));
    CoeffVec b = to_coeffs(primitive_wrt_last_2d(g));
    if (a.empty() || b.empty())
        throw std::invalid_argument("gcd_wrt_last_2d: input without the last variable");
    while (true) {
        if (cdeg(a) < cdeg(b)) std::swap(a, b);
        if (cdeg(b) < 0) break;
        CoeffVec r = pseudo_rem(a, b);
        cnormalize(r);
        a = std::move(b);
        b = std::move(r);
    }
    // a holds the last nonzero element; take its primitive part
    Polynomial gpoly(2);
    UPoly gcontent;
    for (const auto& c : a) gcontent = up::gcd(gcontent, up::from_polynomial(c.drop_variable(1)));
    for (size_t k = 0; k < a.size(); ++k) {
        Polynomial coeff = a[k];
        if (up::degree(gcontent) > 0)
            coeff = exact_div(coeff, up::to_polynomial(gcontent).insert_variable(1));
        gpoly = gpoly + coeff * Polynomial::term(2, Monomial{0, static_cast<unsigned>(k)}, Rational(1));
    }
    return gpoly;
}

Polynomial squarefree_part_wrt_last(const Polynomial& f) {
    if (f.arity() != 2)
        throw std::invalid_argument("squarefree_part_wrt_last: implemented for arity 2");
    auto d = f.degree_in(1);
    if (!d) throw std::invalid_argument("squarefree_part_wrt_last: zero polynomial");
    if (*d == 0) return f;

    // strip the X1-content so Gauss's lemma applies
    UPoly content;
    for (unsigned k = 0; k <= *d; ++k) {
        Polynomial ck = f.coeff_wrt(1, k);
        content = up::gcd(content, up::from_polynomial(ck.drop_variable(1)));
    }
    Polynomial primitive = f;
    if (up::degree(content) > 0) {
        primitive = exact_div(f, up::to_polynomial(content).insert_variable(1));
    }
    if (*primitive.degree_in(1) == 0) return primitive;

    // gcd with the X2-derivative via a plain PRS; any associate works here
    CoeffVec a = to_coeffs(primitive), b = to_coeffs(primitive.derivative(1));
    if (b.empty()) return primitive;
    while (true) {
        if (cdeg(a) < cdeg(b)) std::swap(a, b);
        CoeffVec r = pseudo_rem(a, b);
        cnormalize(r);
        if (r.empty()) break;
        a = std::move(b);
        b = std::move(r);
    }
    if (cdeg(b) == 0) return primitive;

    // primitive part of the gcd candidate, then exact division
    Polynomial g(2);
    {
        UPoly gcontent;
        for (const auto& c : b) gcontent = up::gcd(gcontent, up::from_polynomial(c.drop_variable(1)));
        Polynomial gpoly(2);
        for (size_t k = 0; k < b.size(); ++k) {
            Polynomial coeff = b[k];
            if (up::degree(gcontent) > 0)
                coeff = exact_div(coeff, up::to_polynomial(gcontent).insert_variable(1));
            Monomial m{0, static_cast<unsigned>(k)};
            gpoly = gpoly + coeff * Polynomial::term(2, m, Rational(1));
        }
        g = gpoly;
    }
    return exact_div(primitive, g);
}

}   // namespace semialg
