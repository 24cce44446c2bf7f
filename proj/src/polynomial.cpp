#include "semialg/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace semialg {

unsigned monomial_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    // same degree: lex with X1 most significant; a < b when a is lex-smaller
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

Polynomial Polynomial::constant(unsigned arity, const Rational& c) {
    Polynomial p(arity);
    if (c != 0) p.terms_.emplace(Monomial(arity, 0), c);
    return p;
}

Polynomial Polynomial::variable(unsigned arity, unsigned index) {
    if (index >= arity) throw std::out_of_range("Polynomial::variable: index out of range");
    Polynomial p(arity);
    Monomial m(arity, 0);
    m[index] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Polynomial Polynomial::term(unsigned arity, Monomial m, const Rational& c) {
    if (m.size() != arity) throw std::invalid_argument("Polynomial::term: exponent length mismatch");
    Polynomial p(arity);
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
}

std::optional<unsigned> Polynomial::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    return monomial_degree(terms_.rbegin()->first);
}

std::optional<unsigned> Polynomial::degree_in(unsigned var) const {
    if (var >= arity_) throw std::out_of_range("degree_in: variable index out of range");
    if (terms_.empty()) return std::nullopt;
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != arity_) throw std::invalid_argument("add_term: exponent length mismatch");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(arity_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("polynomial arity mismatch");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("polynomial arity mismatch");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("polynomial arity mismatch");
    Polynomial r(arity_);
    Monomial prod(arity_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (unsigned i = 0; i < arity_; ++i) prod[i] = ma[i] + mb[i];
            r.add_term(prod, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(arity_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = Polynomial::constant(arity_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
    if (point.size() != arity_) throw std::invalid_argument("eval: point arity mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (unsigned i = 0; i < arity_; ++i) {
            if (m[i] > 0) t *= pow_rational(point[i], m[i]);
        }
        acc += t;
    }
    return acc;
}

double Polynomial::eval_double(const std::vector<double>& point) const {
    if (point.size() != arity_) throw std::invalid_argument("eval_double: point arity mismatch");
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = to_double(c);
        for (unsigned i = 0; i < arity_; ++i) {
            for (unsigned k = 0; k < m[i]; ++k) t *= point[i];
        }
        acc += t;
    }
    return acc;
}

IntervalQ Polynomial::eval_interval(const std::vector<IntervalQ>& box) const {
    if (box.size() != arity_) throw std::invalid_argument("eval_interval: box arity mismatch");
    IntervalQ acc(Rational(0));
    for (const auto& [m, c] : terms_) {
        IntervalQ t{c, c};
        for (unsigned i = 0; i < arity_; ++i) {
            for (unsigned k = 0; k < m[i]; ++k) t = t * box[i];
        }
        acc = acc + t;
    }
    return acc;
}

Polynomial Polynomial::derivative(unsigned var) const {
    if (var >= arity_) throw std::out_of_range("derivative: variable index out of range");
    Polynomial r(arity_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * Rational(m[var]));
    }
    return r;
}

Polynomial Polynomial::substitute(unsigned var, const Rational& value) const {
    if (var >= arity_) throw std::out_of_range("substitute: variable index out of range");
    Polynomial r(arity_);
    for (const auto& [m, c] : terms_) {
        Monomial d = m;
        unsigned e = d[var];
        d[var] = 0;
        r.add_term(d, e == 0 ? c : c * pow_rational(value, e));
    }
    return r;
}

Polynomial Polynomial::coeff_wrt(unsigned var, unsigned k) const {
    if (var >= arity_) throw std::out_of_range("coeff_wrt: variable index out of range");
    Polynomial r(arity_);
    for (const auto& [m, c] : terms_) {
        if (m[var] != k) continue;
        Monomial d = m;
        d[var] = 0;
        r.add_term(d, c);
    }
    return r;
}

Polynomial Polynomial::drop_variable(unsigned var) const {
    if (var >= arity_) throw std::out_of_range("drop_variable: variable index out of range");
    Polynomial r(arity_ - 1);
    for (const auto& [m, c] : terms_) {
        if (m[var] != 0) throw std::logic_error("drop_variable: variable still occurs");
        Monomial d;
        d.reserve(arity_ - 1);
        for (unsigned i = 0; i < arity_; ++i) {
            if (i != var) d.push_back(m[i]);
        }
        r.add_term(d, c);
    }
    return r;
}

Polynomial Polynomial::insert_variable(unsigned var) const {
    if (var > arity_) throw std::out_of_range("insert_variable: position out of range");
    Polynomial r(arity_ + 1);
    for (const auto& [m, c] : terms_) {
        Monomial d;
        d.reserve(arity_ + 1);
        for (unsigned i = 0; i < var; ++i) d.push_back(m[i]);
        d.push_back(0);
        for (unsigned i = var; i < arity_; ++i) d.push_back(m[i]);
        r.add_term(d, c);
    }
    return r;
}

namespace {

void append_rational(std::ostringstream& out, const Rational& q) {
    out << q.get_num().get_str();
    if (q.get_den() != 1) out << '/' << q.get_den().get_str();
}

}   // namespace

std::string Polynomial::to_string(const std::vector<std::string>& vars) const {
    if (vars.size() != arity_) throw std::invalid_argument("to_string: variable list arity mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // canonical order: graded lex, highest term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = abs_rational(c);
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool has_vars = monomial_degree(m) > 0;
        if (!has_vars || mag != 1) {
            append_rational(out, mag);
            if (has_vars) out << '*';
        }
        bool first_var = true;
        for (unsigned i = 0; i < arity_; ++i) {
            if (m[i] == 0) continue;
            if (!first_var) out << '*';
            first_var = false;
            out << vars[i];
            if (m[i] > 1) out << '^' << m[i];
        }
    }
    return out.str();
}

}   // namespace semialg
