#include "semialg/fiber.hpp"

#include <functional>
#include <stdexcept>

namespace semialg {

FiberLine::FiberLine(IsolatingInterval alpha)
    : alpha_(std::move(alpha)), defining_(alpha_.polynomial()) {}

FiberLine FiberLine::at_rational(const Rational& x) {
    // alpha is the root of X - x; all coefficient arithmetic reduces to
    // evaluation at x
    UPoly line_poly{-x, Rational(1)};
    auto ctx = std::make_shared<SturmContext>(line_poly);
    return FiberLine(IsolatingInterval::exact(std::move(ctx), x));
}

int FiberLine::sign_coeff(const UPoly& u) const { return alpha_.sign_of(u); }

UPoly FiberLine::reduce(const UPoly& u) const {
    if (up::degree(u) < up::degree(defining_)) return u;
    return up::rem(u, defining_);
}

FiberLine::FPoly FiberLine::lift(const Polynomial& f) const {
    if (f.arity() != 2) throw std::invalid_argument("FiberLine::lift: arity must be 2");
    FPoly out;
    auto d = f.degree_in(1);
    if (!d) return out;
    out.c.resize(*d + 1);
    for (unsigned k = 0; k <= *d; ++k) {
        out.c[k] = reduce(up::from_polynomial(f.coeff_wrt(1, k).drop_variable(1)));
    }
    return normalize(std::move(out));
}

FiberLine::FPoly FiberLine::normalize(FPoly p) const {
    while (!p.c.empty() && sign_coeff(p.c.back()) == 0) p.c.pop_back();
    return p;
}

FiberLine::FPoly FiberLine::derivative_y(const FPoly& p) const {
    FPoly out;
    if (p.c.size() <= 1) return out;
    out.c.resize(p.c.size() - 1);
    for (size_t j = 1; j < p.c.size(); ++j) {
        out.c[j - 1] = up::scale(p.c[j], Rational(static_cast<unsigned long>(j)));
    }
    return normalize(std::move(out));
}

FiberLine::FPoly FiberLine::multiply(const FPoly& a, const FPoly& b) const {
    FPoly out;
    if (a.zero() || b.zero()) return out;
    out.c.assign(a.c.size() + b.c.size() - 1, UPoly{});
    for (size_t i = 0; i < a.c.size(); ++i) {
        for (size_t j = 0; j < b.c.size(); ++j) {
            out.c[i + j] = up::add(out.c[i + j], up::mul(a.c[i], b.c[j]));
        }
    }
    for (auto& u : out.c) u = reduce(u);
    return normalize(std::move(out));
}

int FiberLine::sign_at(const FPoly& p, const Rational& y) const {
    UPoly acc;   // Horner in y over the coefficient ring
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
        acc = up::add(up::scale(acc, y), *it);
        acc = reduce(acc);
    }
    return sign_coeff(acc);
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b over the coefficient ring, with
// reduction through the line.
FiberLine::FPoly fiber_prem(const FiberLine& line, const FiberLine::FPoly& a,
                            const FiberLine::FPoly& b, int& lead_power) {
    FiberLine::FPoly r = a;
    const UPoly& lead = b.c.back();
    int e = a.degree() - b.degree() + 1;
    lead_power = e;
    while (!r.zero() && r.degree() >= b.degree()) {
        size_t shift = r.c.size() - b.c.size();
        UPoly top = r.c.back();
        FiberLine::FPoly next;
        next.c.resize(r.c.size() - 1);
        for (size_t i = 0; i + 1 < r.c.size(); ++i) {
            next.c[i] = up::mul(r.c[i], lead);
            if (i >= shift) next.c[i] = up::sub(next.c[i], up::mul(top, b.c[i - shift]));
            next.c[i] = line.reduce(next.c[i]);
        }
        r = line.normalize(std::move(next));
        --e;
    }
    for (int k = 0; k < e; ++k) {
        for (auto& u : r.c) u = line.reduce(up::mul(u, lead));
    }
    return r;
}

}   // namespace

namespace {

// Rescale by a factor that is positive at alpha: strip the common polynomial
// content (sign-corrected) and the rational content. Positive rescaling
// keeps the chain a valid Sturm chain on the line.
FiberLine::FPoly strip_content(const FiberLine& line, FiberLine::FPoly p) {
    p = line.normalize(std::move(p));
    if (p.zero()) return p;
    UPoly content;
    for (const auto& u : p.c) content = up::gcd(content, u);
    if (up::degree(content) >= 1) {
        int s = line.sign_coeff(content);
        for (auto& u : p.c) {
            u = up::divmod(u, content).first;
            if (s < 0) u = up::neg(u);
        }
    }
    Int num_gcd(0), den_lcm(1);
    for (const auto& u : p.c) {
        for (const auto& q : u) {
            Int g, l;
            mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
            num_gcd = g;
            mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
            den_lcm = l;
        }
    }
    if (num_gcd != 0 && (num_gcd != 1 || den_lcm != 1)) {
        Rational scale = make_rational(den_lcm, num_gcd);
        for (auto& u : p.c) u = up::scale(u, scale);
    }
    return p;
}

}   // namespace

std::vector<FiberLine::FPoly> FiberLine::sturm_chain(const FPoly& p) const {
    FPoly p0 = normalize(p);
    if (p0.zero()) throw std::invalid_argument("sturm_chain: zero fiber polynomial");
    std::vector<FPoly> chain;
    chain.push_back(p0);
    if (p0.degree() == 0) return chain;
    chain.push_back(derivative_y(p0));
    while (!chain.back().zero() && chain.back().degree() > 0) {
        const FPoly& a = chain[chain.size() - 2];
        const FPoly& b = chain.back();
        int lead_power = 0;
        FPoly r = fiber_prem(*this, a, b, lead_power);
        if (normalize(r).zero()) break;
        // prem scaled a by lc(b)^lead_power; flip so the stored element is a
        // positive multiple of minus the true remainder
        int lead_sign = sign_coeff(b.c.back());
        int mult_sign = (lead_power % 2 == 0) ? 1 : lead_sign;
        if (mult_sign > 0) {
            for (auto& u : r.c) u = up::neg(u);
        }
        chain.push_back(strip_content(*this, std::move(r)));
    }
    return chain;
}

int FiberLine::variations_at(const std::vector<FPoly>& chain, const Rational& y) const {
    int v = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, y);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int FiberLine::count_roots_in(const std::vector<FPoly>& chain, const Rational& a,
                              const Rational& b) const {
    if (!(a < b)) throw std::invalid_argument("fiber count_roots_in: requires a < b");
    return variations_at(chain, a) - variations_at(chain, b);
}

Rational FiberLine::root_bound(const FPoly& p) const {
    if (p.zero()) throw std::invalid_argument("root_bound: zero fiber polynomial");
    // refine alpha until the leading coefficient's interval is sign-definite
    const UPoly& lead = p.c.back();
    for (;;) {
        IntervalQ box{alpha_.low(), alpha_.high()};
        IntervalQ lead_range = up::eval_interval(lead, box);
        if (!lead_range.contains_zero()) {
            Rational lead_min = std::min(abs_rational(lead_range.lo), abs_rational(lead_range.hi));
            Rational m(0);
            for (size_t j = 0; j + 1 < p.c.size(); ++j) {
                m = std::max(m, up::eval_interval(p.c[j], box).mag());
            }
            return Rational(1) + m / lead_min;
        }
        alpha_.refine();
    }
}

FiberRoot::FiberRoot(std::shared_ptr<const FiberLine> line,
                     std::shared_ptr<const std::vector<FiberLine::FPoly>> chain,
                     FiberLine::FPoly poly, Rational lo, Rational hi)
    : line_(std::move(line)), chain_(std::move(chain)), poly_(std::move(poly)),
      lo_(std::move(lo)), hi_(std::move(hi)) {}

void FiberRoot::refine() const {
    if (is_exact()) return;
    Rational mid = (lo_ + hi_) / 2;
    if (line_->sign_at(poly_, mid) == 0) {
        lo_ = mid;
        hi_ = mid;
        return;
    }
    int v = line_->variations_at(*chain_, lo_) - line_->variations_at(*chain_, mid);
    if (v >= 1) {
        hi_ = mid;
    } else {
        lo_ = mid;
    }
}

void FiberRoot::refine_below(const Rational& width) const {
    while (!is_exact() && hi_ - lo_ > width) refine();
}

double FiberRoot::approx(double max_width) const {
    refine_below(rational_from_double(max_width > 0 ? max_width : 1e-9));
    return to_double((lo_ + hi_) / 2);
}

int FiberRoot::compare(const Rational& y) const {
    if (is_exact()) return lo_ < y ? -1 : (lo_ == y ? 0 : 1);
    if (y <= lo_) return 1;
    if (y >= hi_) return -1;
    if (line_->sign_at(poly_, y) == 0) return 0;
    int v = line_->variations_at(*chain_, lo_) - line_->variations_at(*chain_, y);
    return v >= 1 ? -1 : 1;
}

int FiberRoot::sign_of(const FiberLine::FPoly& q,
                       const std::vector<FiberLine::FPoly>& q_chain) const {
    if (q.zero()) return 0;
    if (is_exact()) return line_->sign_at(q, lo_);
    if (q.degree() == 0) return line_->sign_coeff(q.c.front());
    // decide q(root) = 0 through the product chain: once the interval holds a
    // single distinct root of poly_*q while q still has one, they coincide
    std::vector<FiberLine::FPoly> pair_chain;
    for (;;) {
        int sl = line_->sign_at(q, lo_);
        int sh = line_->sign_at(q, hi_);
        if (sl != 0 && sh != 0) {
            int inside = line_->count_roots_in(q_chain, lo_, hi_);
            if (inside == 0) {
                if (sl == sh) return sl;
                throw std::logic_error("FiberRoot::sign_of: inconsistent chain");
            }
            if (pair_chain.empty()) {
                pair_chain = line_->sturm_chain(line_->multiply(poly_, q));
            }
            if (line_->count_roots_in(pair_chain, lo_, hi_) == 1) return 0;
        }
        refine();
        if (is_exact()) return line_->sign_at(q, lo_);
    }
}

const FiberLine::FPoly& FiberRoot::defining() const { return poly_; }

std::vector<FiberRoot> isolate_fiber_roots(std::shared_ptr<const FiberLine> line,
                                           const FiberLine::FPoly& p) {
    FiberLine::FPoly q = line->normalize(p);
    if (q.zero()) throw std::invalid_argument("isolate_fiber_roots: zero fiber polynomial");
    std::vector<FiberRoot> out;
    if (q.degree() == 0) return out;
    auto chain = std::make_shared<std::vector<FiberLine::FPoly>>(line->sturm_chain(q));
    Rational bound = line->root_bound(q) + 1;

    // recursive bisection, exactly as in the rational case
    std::function<void(const Rational&, const Rational&, int, int)> bisect =
        [&](const Rational& lo, const Rational& hi, int vlo, int vhi) {
            int count = vlo - vhi;
            if (count == 0) return;
            if (count == 1) {
                out.emplace_back(line, chain, q, lo, hi);
                return;
            }
            Rational mid = (lo + hi) / 2;
            if (line->sign_at(q, mid) == 0) {
                Rational delta = std::min(mid - lo, hi - mid) / 2;
                for (;;) {
                    Rational a = mid - delta, b = mid + delta;
                    if (line->sign_at(q, a) != 0 && line->sign_at(q, b) != 0 &&
                        line->count_roots_in(*chain, a, b) == 1) {
                        int va = line->variations_at(*chain, a);
                        int vb = line->variations_at(*chain, b);
                        bisect(lo, a, vlo, va);
                        out.emplace_back(line, chain, q, mid, mid);
                        bisect(b, hi, vb, vhi);
                        return;
                    }
                    delta /= 2;
                }
            }
            int vm = line->variations_at(*chain, mid);
            bisect(lo, mid, vlo, vm);
            bisect(mid, hi, vm, vhi);
        };
    bisect(-bound, bound, line->variations_at(*chain, -bound),
           line->variations_at(*chain, bound));
    return out;
}

FiberStack::FiberStack(std::shared_ptr<const FiberLine> line,
                       const std::vector<Polynomial>& family)
    : line_(std::move(line)) {
    for (const auto& f : family) {
        Member m;
        m.poly = line_->lift(f);
        if (m.poly.zero()) {
            m.constant_sign = 0;
        } else if (m.poly.degree() == 0) {
            m.constant_sign = line_->sign_coeff(m.poly.c.front());
        } else {
            m.chain = line_->sturm_chain(m.poly);
            m.roots = isolate_fiber_roots(line_, m.poly);
        }
        members_.push_back(std::move(m));
    }

    // merge the per-member sorted root lists with exact comparisons
    for (size_t mi = 0; mi < members_.size(); ++mi) {
        for (size_t a = 0; a < members_[mi].roots.size(); ++a) {
            const FiberRoot& r = members_[mi].roots[a];
            size_t pos = merged_.size();
            bool duplicate = false;
            for (size_t k = 0; k < merged_.size(); ++k) {
                const FiberRoot& other = root(k);
                size_t mj = merged_[k].first;
                int cmp;
                if (r.high() < other.low()) {
                    cmp = -1;
                } else if (other.high() < r.low()) {
                    cmp = 1;
                } else if (roots_equal(r, mj, other)) {
                    cmp = 0;
                } else {
                    // distinct roots with overlapping intervals: separate them
                    for (;;) {
                        r.refine();
                        other.refine();
                        if (r.high() < other.low()) {
                            cmp = -1;
                            break;
                        }
                        if (other.high() < r.low()) {
                            cmp = 1;
                            break;
                        }
                    }
                }
                if (cmp == 0) {
                    duplicate = true;
                    break;
                }
                if (cmp < 0) {
                    pos = k;
                    break;
                }
            }
            if (!duplicate) merged_.insert(merged_.begin() + pos, {mi, a});
        }
    }
}

bool FiberStack::roots_equal(const FiberRoot& a, size_t member_b, const FiberRoot& b) const {
    // a equals b iff member_b vanishes at a and a lies inside b's isolating
    // interval
    int s = a.sign_of(members_[member_b].poly, members_[member_b].chain);
    if (s != 0) return false;
    if (b.is_exact()) return a.compare(b.low()) == 0;
    return a.compare(b.low()) > 0 && a.compare(b.high()) < 0;
}

const FiberRoot& FiberStack::root(size_t k) const {
    const auto& [mi, idx] = merged_.at(k);
    return members_[mi].roots[idx];
}

double FiberStack::root_approx(size_t k, double width) const { return root(k).approx(width); }

int FiberStack::member_sign_at_root(size_t member, size_t k) const {
    const Member& m = members_.at(member);
    if (m.poly.zero()) return 0;
    if (m.poly.degree() == 0) return m.constant_sign;
    if (merged_.at(k).first == member) return 0;
    return root(k).sign_of(m.poly, m.chain);
}

int FiberStack::member_sign_at(size_t member, const Rational& y) const {
    const Member& m = members_.at(member);
    if (m.poly.zero()) return 0;
    return line_->sign_at(m.poly, y);
}

int FiberStack::sign_at_root(const Polynomial& q, size_t k) const {
    FiberLine::FPoly lifted = line_->lift(q);
    if (lifted.zero()) return 0;
    if (lifted.degree() == 0) return line_->sign_coeff(lifted.c.front());
    auto chain = line_->sturm_chain(lifted);
    return root(k).sign_of(lifted, chain);
}

int FiberStack::compare_root(size_t k, const Rational& y) const { return root(k).compare(y); }

std::vector<Rational> FiberStack::sector_samples() const {
    std::vector<Rational> samples;
    if (merged_.empty()) {
        samples.push_back(Rational(0));
        return samples;
    }
    samples.push_back(floor_rational(root(0).low()) - 1);
    for (size_t k = 0; k + 1 < merged_.size(); ++k) {
        const FiberRoot& a = root(k);
        const FiberRoot& b = root(k + 1);
        while (!(a.high() < b.low() ||
                 (a.high() == b.low() && !a.is_exact() && !b.is_exact()))) {
            a.refine();
            b.refine();
        }
        if (a.high() == b.low()) {
            samples.push_back(a.high());
        } else {
            samples.push_back(simplest_rational_between(a.high(), b.low()));
        }
    }
    samples.push_back(Rational(ceil_rational(root(merged_.size() - 1).high())) + 1);
    return samples;
}

}   // namespace semialg
