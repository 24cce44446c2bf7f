#include "semialg/upoly.hpp"

#include <stdexcept>

namespace semialg {
namespace up {

UPoly from_polynomial(const Polynomial& p) {
    if (p.arity() != 1) throw std::invalid_argument("from_polynomial: arity must be 1");
    UPoly out;
    for (const auto& [m, c] : p.terms()) {
        if (m[0] >= out.size()) out.resize(m[0] + 1, Rational(0));
        out[m[0]] = c;
    }
    normalize(out);
    return out;
}

Polynomial to_polynomial(const UPoly& p) {
    Polynomial out(1);
    for (size_t i = 0; i < p.size(); ++i) {
        out.add_term({static_cast<unsigned>(i)}, p[i]);
    }
    return out;
}

void normalize(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly constant(const Rational& c) {
    UPoly p;
    if (c != 0) p.push_back(c);
    return p;
}

UPoly identity() { return {Rational(0), Rational(1)}; }

UPoly add(const UPoly& a, const UPoly& b) {
    UPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    normalize(r);
    return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
    UPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    normalize(r);
    return r;
}

UPoly neg(const UPoly& a) {
    UPoly r = a;
    for (auto& c : r) c = -c;
    return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    normalize(r);
    return r;
}

UPoly scale(const UPoly& a, const Rational& c) {
    if (c == 0) return {};
    UPoly r = a;
    for (auto& k : r) k *= c;
    return r;
}

UPoly derivative(const UPoly& a) {
    if (a.size() <= 1) return {};
    UPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Rational(static_cast<unsigned long>(i));
    normalize(r);
    return r;
}

Rational eval(const UPoly& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double eval_double(const UPoly& p, double x) {
    double acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

IntervalQ eval_interval(const UPoly& p, const IntervalQ& x) {
    IntervalQ acc(Rational(0));
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + IntervalQ(*it);
    return acc;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.empty()) throw std::invalid_argument("divmod: division by zero polynomial");
    UPoly r = a;
    int db = degree(b);
    if (degree(a) < db) return {{}, r};
    UPoly q(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (degree(r) >= db) {
        size_t shift = r.size() - b.size();
        Rational factor = r.back() / lead;
        q[shift] = factor;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= factor * b[i];
        // the top term cancels exactly
        r.pop_back();
        normalize(r);
    }
    normalize(q);
    return {q, r};
}

UPoly rem(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.empty()) {
        UPoly r = rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (!x.empty() && x.back() != 1) {
        Rational inv = Rational(1) / x.back();
        for (auto& c : x) c *= inv;
    }
    return x;
}

UPoly squarefree_part(const UPoly& p) {
    if (p.empty()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (degree(p) == 0) return p;
    UPoly g = gcd(p, derivative(p));
    if (degree(g) == 0) return p;
    return divmod(p, g).first;
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
    if (p.empty()) throw std::invalid_argument("sturm_sequence: zero polynomial");
    std::vector<UPoly> chain;
    chain.push_back(p);
    if (degree(p) == 0) return chain;
    chain.push_back(derivative(p));
    while (!chain.back().empty() && degree(chain.back()) > 0) {
        UPoly r = neg(rem(chain[chain.size() - 2], chain.back()));
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

namespace {

int variations(const std::vector<int>& signs) {
    int v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}   // namespace

int sign_variations_at(const std::vector<UPoly>& chain, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) signs.push_back(sign_of(eval(p, x)));
    return variations(signs);
}

int sign_variations_at_neg_inf(const std::vector<UPoly>& chain) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) {
        if (p.empty()) {
            signs.push_back(0);
        } else {
            int s = sign_of(p.back());
            if (degree(p) % 2 == 1) s = -s;
            signs.push_back(s);
        }
    }
    return variations(signs);
}

int sign_variations_at_pos_inf(const std::vector<UPoly>& chain) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) signs.push_back(p.empty() ? 0 : sign_of(p.back()));
    return variations(signs);
}

Rational cauchy_root_bound(const UPoly& p) {
    if (p.empty()) throw std::invalid_argument("cauchy_root_bound: zero polynomial");
    Rational lead = abs_rational(p.back());
    Rational m(0);
    for (size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, abs_rational(p[i]));
    return Rational(1) + m / lead;
}

int count_roots_in(const UPoly& p, const Rational& a, const Rational& b) {
    if (p.empty()) throw std::invalid_argument("count_roots_in: zero polynomial");
    if (!(a < b)) throw std::invalid_argument("count_roots_in: requires a < b");
    if (eval(p, a) == 0 || eval(p, b) == 0)
        throw std::invalid_argument("count_roots_in: endpoint is a root");
    auto chain = sturm_sequence(p);
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

int count_real_roots(const UPoly& p) {
    if (p.empty()) throw std::invalid_argument("count_real_roots: zero polynomial");
    if (degree(p) == 0) return 0;
    auto chain = sturm_sequence(p);
    return sign_variations_at_neg_inf(chain) - sign_variations_at_pos_inf(chain);
}

}   // namespace up
}   // namespace semialg
