#pragma once

#include "semialg/polynomial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace semialg {

enum class Rel { Eq0, Gt0, Lt0, Ge0, Le0, Ne0 };

const char* rel_name(Rel r);          // "eq0", "gt0", ...
Rel rel_from_name(const std::string& s);
bool rel_holds(Rel r, int sign);

/// Polynomial sign atom of a quantifier-free formula.
struct Atom {
    Polynomial poly;
    Rel rel;
};

/// Quantifier-free boolean combination of polynomial sign atoms.
class Formula {
public:
    enum class Kind { And, Or, Not, Leaf, True, False };

    struct Node {
        Kind kind;
        std::vector<std::shared_ptr<const Node>> children;   // And / Or / Not
        std::optional<Atom> atom;                            // Leaf
    };
    using NodePtr = std::shared_ptr<const Node>;

    static Formula atom(Polynomial p, Rel rel);
    static Formula conjunction(std::vector<Formula> parts);
    static Formula disjunction(std::vector<Formula> parts);
    static Formula negation(Formula f);
    static Formula verum(unsigned arity);
    static Formula falsum(unsigned arity);

    unsigned arity() const { return arity_; }
    const NodePtr& root() const { return root_; }

    bool eval(const std::vector<Rational>& point) const;

    /// Polynomials of all atoms, in first-visit order.
    std::vector<Polynomial> atom_polynomials() const;

    /// Truth value when every atom's polynomial sign is prescribed. The signs
    /// vector is indexed like atom_polynomials() of `family_signs` semantics:
    /// the callback maps an atom index to a sign in {-1,0,+1}.
    bool eval_with_signs(const std::vector<int>& atom_signs) const;

    std::string to_json(const std::vector<std::string>& vars) const;
    static Formula from_json(const std::string& json_text);

private:
    Formula(unsigned arity, NodePtr root) : arity_(arity), root_(std::move(root)) {}

    unsigned arity_;
    NodePtr root_;
};

}   // namespace semialg
