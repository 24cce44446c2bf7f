#pragma once

#include "semialg/numbers.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace semialg {

/// Exponent vector; length always equals the owning polynomial's arity.
using Monomial = std::vector<unsigned>;

unsigned monomial_degree(const Monomial& m);

/// Graded lexicographic order (total degree first, then lex, X1 heaviest).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Q. Invariants: no stored zero
/// coefficient, every key has length arity().
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    explicit Polynomial(unsigned arity = 0) : arity_(arity) {}
    static Polynomial constant(unsigned arity, const Rational& c);
    static Polynomial variable(unsigned arity, unsigned index);
    static Polynomial term(unsigned arity, Monomial m, const Rational& c);

    unsigned arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Total degree; nullopt is the degree of the zero polynomial.
    std::optional<unsigned> total_degree() const;
    std::optional<unsigned> degree_in(unsigned var) const;

    Rational coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(unsigned e) const;
    bool operator==(const Polynomial& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Rational eval(const std::vector<Rational>& point) const;
    double eval_double(const std::vector<double>& point) const;
    IntervalQ eval_interval(const std::vector<IntervalQ>& box) const;

    Polynomial derivative(unsigned var) const;

    /// Substitute an exact value for one variable; result keeps the arity
    /// with that variable's exponent pinned to zero.
    Polynomial substitute(unsigned var, const Rational& value) const;

    /// Coefficient of var^k, as a polynomial of the same arity not involving var.
    Polynomial coeff_wrt(unsigned var, unsigned k) const;

    /// Drop a variable that no longer occurs (exponent 0 everywhere).
    Polynomial drop_variable(unsigned var) const;

    /// Insert a fresh variable (exponent 0 everywhere) at position var.
    Polynomial insert_variable(unsigned var) const;

    std::string to_string(const std::vector<std::string>& vars) const;

private:
    unsigned arity_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

}   // namespace semialg
