#include "semialg/realroot.hpp"

#include <algorithm>
#include <stdexcept>

namespace semialg {

SturmContext::SturmContext(UPoly sf) : squarefree(std::move(sf)) {
    chain = up::sturm_sequence(squarefree);
    // primitive integer form: rational roots p/q have q dividing the leading
    // coefficient, and distinct rationals with denominator <= q are at least
    // 1/q^2 apart
    Int den_lcm(1);
    for (const auto& c : squarefree) {
        Int l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        den_lcm = l;
    }
    Int num_gcd(0);
    for (const auto& c : squarefree) {
        Int scaled = c.get_num() * (den_lcm / c.get_den());
        Int g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
        num_gcd = g;
    }
    if (num_gcd == 0) num_gcd = 1;
    rational_den_bound =
        abs(squarefree.back().get_num() * (den_lcm / squarefree.back().get_den())) / num_gcd;
}

IsolatingInterval::IsolatingInterval(std::shared_ptr<const SturmContext> ctx, Rational low,
                                     Rational high)
    : ctx_(std::move(ctx)), low_(std::move(low)), high_(std::move(high)) {
    if (low_ > high_) throw std::invalid_argument("IsolatingInterval: low > high");
}

IsolatingInterval IsolatingInterval::exact(std::shared_ptr<const SturmContext> ctx, Rational q) {
    return IsolatingInterval(std::move(ctx), q, q);
}

void IsolatingInterval::refine() const {
    if (is_exact()) return;
    Rational mid = (low_ + high_) / 2;
    Rational vm = up::eval(ctx_->squarefree, mid);
    if (vm == 0) {
        low_ = mid;
        high_ = mid;
        return;
    }
    // the single root of the square-free polynomial is simple, so the sign
    // changes exactly across it
    int sign_lo = sign_of_rational(up::eval(ctx_->squarefree, low_));
    if (sign_of_rational(vm) != sign_lo) {
        high_ = mid;
    } else {
        low_ = mid;
    }
}

void IsolatingInterval::refine_below(const Rational& width) const {
    while (!is_exact() && high_ - low_ > width) refine();
}

void IsolatingInterval::detect_exact() const {
    if (is_exact()) return;
    // Stern-Brocot descent: each probe either hits the root, confirms the
    // root is irrational (denominator beyond the lead bound), or shrinks the
    // interval. The root is simple, so sign tests steer the side.
    int sign_lo = sign_of_rational(up::eval(ctx_->squarefree, low_));
    for (;;) {
        Rational probe = simplest_rational_between(low_, high_);
        if (probe.get_den() > ctx_->rational_den_bound) return;   // irrational
        Rational v = up::eval(ctx_->squarefree, probe);
        if (v == 0) {
            low_ = probe;
            high_ = probe;
            return;
        }
        if (sign_of_rational(v) != sign_lo) {
            high_ = probe;
        } else {
            low_ = probe;
        }
        // keep the bisection pace so the candidate set thins geometrically
        Rational mid = (low_ + high_) / 2;
        Rational vm = up::eval(ctx_->squarefree, mid);
        if (vm == 0) {
            low_ = mid;
            high_ = mid;
            return;
        }
        if (sign_of_rational(vm) != sign_lo) {
            high_ = mid;
        } else {
            low_ = mid;
        }
    }
}

int IsolatingInterval::sign_of(const UPoly& q) const {
    if (up::is_zero(q)) return 0;
    if (is_exact()) return sign_of_rational(up::eval(q, low_));
    if (up::degree(q) == 0) return sign_of_rational(q[0]);

    // fast path: interval arithmetic decides whenever q is bounded away from 0
    for (int pass = 0; pass < 3; ++pass) {
        IntervalQ range = up::eval_interval(q, IntervalQ{low_, high_});
        if (!range.contains_zero()) return range.lo > 0 ? 1 : -1;
        if (pass + 1 < 3) refine();
        if (is_exact()) return sign_of_rational(up::eval(q, low_));
    }

    // zero case: q vanishes at the root iff gcd(sf, q) has a root here
    UPoly g = up::gcd(ctx_->squarefree, q);
    if (up::degree(g) > 0) {
        // endpoints are never roots of sf, hence not of g
        if (up::count_roots_in(g, low_, high_) > 0) return 0;
    }
    // nonzero: shrink until the interval evaluation becomes sign-definite
    for (;;) {
        refine();
        if (is_exact()) return sign_of_rational(up::eval(q, low_));
        IntervalQ range = up::eval_interval(q, IntervalQ{low_, high_});
        if (!range.contains_zero()) return range.lo > 0 ? 1 : -1;
    }
}

int IsolatingInterval::compare(const Rational& q) const {
    if (is_exact()) return low_ < q ? -1 : (low_ == q ? 0 : 1);
    if (q <= low_) {
        // the root is in (low, high); equal only if q == low is the root (it is not)
        return 1;
    }
    if (q >= high_) return -1;
    Rational vq = up::eval(ctx_->squarefree, q);
    if (vq == 0) return 0;
    // simple root: the sign flips exactly once across it
    int sign_lo = sign_of_rational(up::eval(ctx_->squarefree, low_));
    return sign_of_rational(vq) != sign_lo ? -1 : 1;
}

int IsolatingInterval::compare(const IsolatingInterval& other) const {
    if (other.is_exact()) return compare(other.low());
    if (is_exact()) return -other.compare(low_);
    for (;;) {
        if (high_ < other.low_) return -1;
        if (other.high_ < low_) return 1;
        // overlapping: equal iff a shared root lies in the overlap
        UPoly g = up::gcd(ctx_->squarefree, other.ctx_->squarefree);
        if (up::degree(g) > 0) {
            Rational lo = std::max(low_, other.low_);
            Rational hi = std::min(high_, other.high_);
            if (lo < hi && up::eval(g, lo) != 0 && up::eval(g, hi) != 0 &&
                up::count_roots_in(g, lo, hi) > 0) {
                return 0;
            }
        }
        refine();
        other.refine();
        if (is_exact() && other.is_exact())
            return low_ < other.low_ ? -1 : (low_ == other.low_ ? 0 : 1);
        if (is_exact()) return -other.compare(low_);
        if (other.is_exact()) return compare(other.low_);
    }
}

double IsolatingInterval::approx(double max_width) const {
    if (!is_exact()) {
        refine_below(rational_from_double(max_width > 0 ? max_width : 1e-12));
    }
    return to_double((low_ + high_) / 2);
}

namespace {

// Recursive Sturm bisection on (lo, hi); lo and hi are never roots.
void bisect(const std::shared_ptr<const SturmContext>& ctx, const Rational& lo, const Rational& hi,
            int vlo, int vhi, std::vector<IsolatingInterval>& out) {
    int count = vlo - vhi;
    if (count == 0) return;
    if (count == 1) {
        out.emplace_back(ctx, lo, hi);
        return;
    }
    Rational mid = (lo + hi) / 2;
    if (up::eval(ctx->squarefree, mid) == 0) {
        // exact root at the midpoint: carve out a clean gap around it
        Rational delta = std::min(mid - lo, hi - mid) / 2;
        for (;;) {
            Rational a = mid - delta, b = mid + delta;
            if (up::eval(ctx->squarefree, a) != 0 && up::eval(ctx->squarefree, b) != 0 &&
                up::count_roots_in(ctx->squarefree, a, b) == 1) {
                int va = up::sign_variations_at(ctx->chain, a);
                int vb = up::sign_variations_at(ctx->chain, b);
                bisect(ctx, lo, a, vlo, va, out);
                out.push_back(IsolatingInterval::exact(ctx, mid));
                bisect(ctx, b, hi, vb, vhi, out);
                return;
            }
            delta /= 2;
        }
    }
    int vm = up::sign_variations_at(ctx->chain, mid);
    bisect(ctx, lo, mid, vlo, vm, out);
    bisect(ctx, mid, hi, vm, vhi, out);
}

}   // namespace

std::vector<IsolatingInterval> isolate_roots(const UPoly& p) {
    if (up::is_zero(p)) throw std::invalid_argument("isolate_roots: zero polynomial");
    if (up::degree(p) == 0) return {};
    auto ctx = std::make_shared<SturmContext>(up::squarefree_part(p));
    Rational bound = up::cauchy_root_bound(ctx->squarefree) + 1;
    std::vector<IsolatingInterval> out;
    bisect(ctx, -bound, bound, up::sign_variations_at(ctx->chain, -bound),
           up::sign_variations_at(ctx->chain, bound), out);
    for (const auto& r : out) r.detect_exact();
    return out;
}

std::vector<IsolatingInterval> isolate_roots(const Polynomial& p) {
    return isolate_roots(up::from_polynomial(p));
}

int count_roots_in(const Polynomial& p, const Rational& a, const Rational& b) {
    return up::count_roots_in(up::from_polynomial(p), a, b);
}

int sign_at_root(const Polynomial& q, const IsolatingInterval& root) {
    return root.sign_of(up::from_polynomial(q));
}

unsigned root_multiplicity(const UPoly& p, const IsolatingInterval& root) {
    UPoly d = p;
    unsigned k = 0;
    while (!up::is_zero(d) && root.sign_of(d) == 0) {
        ++k;
        d = up::derivative(d);
    }
    return k;
}

std::vector<ThomEncoding> thom_encode_roots(const Polynomial& p) {
    UPoly u = up::from_polynomial(p);
    if (up::is_zero(u)) throw std::invalid_argument("thom_encode_roots: zero polynomial");
    if (up::degree(u) < 1) throw std::invalid_argument("thom_encode_roots: degree must be >= 1");
    std::vector<UPoly> ders;
    ders.push_back(u);
    while (up::degree(ders.back()) > 0) ders.push_back(up::derivative(ders.back()));
    std::vector<ThomEncoding> out;
    for (auto& root : isolate_roots(u)) {
        std::vector<int> signs;
        signs.reserve(ders.size());
        signs.push_back(0);
        for (size_t j = 1; j < ders.size(); ++j) signs.push_back(root.sign_of(ders[j]));
        out.push_back(ThomEncoding{std::move(root), std::move(signs)});
    }
    return out;
}

std::vector<Cell1> realizable_sign_conditions_1d(const std::vector<Polynomial>& family) {
    std::vector<UPoly> members;
    members.reserve(family.size());
    for (const auto& p : family) {
        UPoly u = up::from_polynomial(p);
        if (up::is_zero(u))
            throw std::invalid_argument("realizable_sign_conditions_1d: zero family member");
        members.push_back(std::move(u));
    }

    // all roots of all members, merged by exact comparison; per-member
    // isolation keeps coefficients small
    std::vector<IsolatingInterval> roots;
    for (const auto& u : members) {
        if (up::degree(u) < 1) continue;
        for (auto& r : isolate_roots(u)) {
            bool duplicate = false;
            size_t pos = roots.size();
            for (size_t i = 0; i < roots.size(); ++i) {
                int c = r.compare(roots[i]);
                if (c == 0) {
                    duplicate = true;
                    break;
                }
                if (c < 0) {
                    pos = i;
                    break;
                }
            }
            if (!duplicate) roots.insert(roots.begin() + pos, std::move(r));
        }
    }

    auto signs_at_sample = [&](const Rational& x) {
        SignCondition s;
        s.reserve(members.size());
        for (const auto& u : members) s.push_back(sign_of_rational(up::eval(u, x)));
        return s;
    };
    auto signs_at_root = [&](const IsolatingInterval& r) {
        SignCondition s;
        s.reserve(members.size());
        for (const auto& u : members) s.push_back(r.sign_of(u));
        return s;
    };

    std::vector<Cell1> cells;
    if (roots.empty()) {
        Cell1 all;
        all.is_point = false;
        all.sample = Rational(0);
        all.signs = signs_at_sample(Rational(0));
        cells.push_back(std::move(all));
        return cells;
    }

    // rational separators strictly between consecutive roots, and outside
    std::vector<Rational> separators;
    separators.push_back(floor_rational(roots.front().low()) - 1);
    for (size_t i = 0; i + 1 < roots.size(); ++i) {
        const auto& a = roots[i];
        const auto& b = roots[i + 1];
        while (!(a.high() < b.low() ||
                 (a.high() == b.low() && !a.is_exact() && !b.is_exact()))) {
            a.refine();
            b.refine();
        }
        if (a.high() == b.low()) {
            separators.push_back(a.high());
        } else {
            separators.push_back(simplest_rational_between(a.high(), b.low()));
        }
    }
    separators.push_back(Rational(ceil_rational(roots.back().high())) + 1);

    for (size_t i = 0; i < roots.size(); ++i) {
        Cell1 gap;
        gap.is_point = false;
        gap.sample = separators[i];
        gap.signs = signs_at_sample(separators[i]);
        cells.push_back(std::move(gap));

        Cell1 pt;
        pt.is_point = true;
        pt.signs = signs_at_root(roots[i]);
        pt.point = std::move(roots[i]);
        cells.push_back(std::move(pt));
    }
    Cell1 last;
    last.is_point = false;
    last.sample = separators.back();
    last.signs = signs_at_sample(separators.back());
    cells.push_back(std::move(last));
    return cells;
}

}   // namespace semialg
