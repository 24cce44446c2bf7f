#include "semialg/formula.hpp"

#include "semialg/parse.hpp"

#include <json.hpp>

#include <stdexcept>

namespace semialg {

const char* rel_name(Rel r) {
    switch (r) {
        case Rel::Eq0: return "eq0";
        case Rel::Gt0: return "gt0";
        case Rel::Lt0: return "lt0";
        case Rel::Ge0: return "ge0";
        case Rel::Le0: return "le0";
        case Rel::Ne0: return "ne0";
    }
    throw std::logic_error("rel_name: bad relation");
}

Rel rel_from_name(const std::string& s) {
    if (s == "eq0") return Rel::Eq0;
    if (s == "gt0") return Rel::Gt0;
    if (s == "lt0") return Rel::Lt0;
    if (s == "ge0") return Rel::Ge0;
    if (s == "le0") return Rel::Le0;
    if (s == "ne0") return Rel::Ne0;
    throw std::invalid_argument("unknown relation name: " + s);
}

bool rel_holds(Rel r, int sign) {
    switch (r) {
        case Rel::Eq0: return sign == 0;
        case Rel::Gt0: return sign > 0;
        case Rel::Lt0: return sign < 0;
        case Rel::Ge0: return sign >= 0;
        case Rel::Le0: return sign <= 0;
        case Rel::Ne0: return sign != 0;
    }
    throw std::logic_error("rel_holds: bad relation");
}

Formula Formula::atom(Polynomial p, Rel rel) {
    unsigned arity = p.arity();
    auto node = std::make_shared<Node>();
    node->kind = Kind::Leaf;
    node->atom = Atom{std::move(p), rel};
    return Formula(arity, std::move(node));
}

Formula Formula::conjunction(std::vector<Formula> parts) {
    if (parts.empty()) throw std::invalid_argument("conjunction: empty");
    unsigned arity = parts.front().arity_;
    auto node = std::make_shared<Node>();
    node->kind = Kind::And;
    for (auto& p : parts) {
        if (p.arity_ != arity) throw std::invalid_argument("conjunction: arity mismatch");
        node->children.push_back(p.root_);
    }
    return Formula(arity, std::move(node));
}

Formula Formula::disjunction(std::vector<Formula> parts) {
    if (parts.empty()) throw std::invalid_argument("disjunction: empty");
    unsigned arity = parts.front().arity_;
    auto node = std::make_shared<Node>();
    node->kind = Kind::Or;
    for (auto& p : parts) {
        if (p.arity_ != arity) throw std::invalid_argument("disjunction: arity mismatch");
        node->children.push_back(p.root_);
    }
    return Formula(arity, std::move(node));
}

Formula Formula::negation(Formula f) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Not;
    node->children.push_back(f.root_);
    return Formula(f.arity_, std::move(node));
}

Formula Formula::verum(unsigned arity) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::True;
    return Formula(arity, std::move(node));
}

Formula Formula::falsum(unsigned arity) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::False;
    return Formula(arity, std::move(node));
}

namespace {

bool eval_node(const Formula::Node& node, const std::vector<Rational>& point) {
    switch (node.kind) {
        case Formula::Kind::True: return true;
        case Formula::Kind::False: return false;
        case Formula::Kind::Leaf:
            return rel_holds(node.atom->rel, sign_of_rational(node.atom->poly.eval(point)));
        case Formula::Kind::Not: return !eval_node(*node.children.front(), point);
        case Formula::Kind::And:
            for (const auto& c : node.children) {
                if (!eval_node(*c, point)) return false;
            }
            return true;
        case Formula::Kind::Or:
            for (const auto& c : node.children) {
                if (eval_node(*c, point)) return true;
            }
            return false;
    }
    throw std::logic_error("eval_node: bad kind");
}

void collect_atoms(const Formula::Node& node, std::vector<Polynomial>& out) {
    if (node.kind == Formula::Kind::Leaf) {
        out.push_back(node.atom->poly);
        return;
    }
    for (const auto& c : node.children) collect_atoms(*c, out);
}

bool eval_node_signs(const Formula::Node& node, const std::vector<int>& signs, size_t& next) {
    switch (node.kind) {
        case Formula::Kind::True: return true;
        case Formula::Kind::False: return false;
        case Formula::Kind::Leaf: {
            if (next >= signs.size()) throw std::invalid_argument("eval_with_signs: too few signs");
            return rel_holds(node.atom->rel, signs[next++]);
        }
        case Formula::Kind::Not: return !eval_node_signs(*node.children.front(), signs, next);
        case Formula::Kind::And: {
            bool ok = true;
            for (const auto& c : node.children) ok = eval_node_signs(*c, signs, next) && ok;
            return ok;
        }
        case Formula::Kind::Or: {
            bool ok = false;
            for (const auto& c : node.children) ok = eval_node_signs(*c, signs, next) || ok;
            return ok;
        }
    }
    throw std::logic_error("eval_node_signs: bad kind");
}

}   // namespace

bool Formula::eval(const std::vector<Rational>& point) const {
    if (point.size() != arity_) throw std::invalid_argument("Formula::eval: arity mismatch");
    return eval_node(*root_, point);
}

std::vector<Polynomial> Formula::atom_polynomials() const {
    std::vector<Polynomial> out;
    collect_atoms(*root_, out);
    return out;
}

bool Formula::eval_with_signs(const std::vector<int>& atom_signs) const {
    size_t next = 0;
    bool r = eval_node_signs(*root_, atom_signs, next);
    if (next != atom_signs.size())
        throw std::invalid_argument("eval_with_signs: sign count mismatch");
    return r;
}

namespace {

using nlohmann::ordered_json;

ordered_json node_to_json(const Formula::Node& node, const std::vector<std::string>& vars) {
    ordered_json j;
    switch (node.kind) {
        case Formula::Kind::True:
            j["op"] = "true";
            break;
        case Formula::Kind::False:
            j["op"] = "false";
            break;
        case Formula::Kind::Leaf:
            j["op"] = "atom";
            j["poly"] = node.atom->poly.to_string(vars);
            j["rel"] = rel_name(node.atom->rel);
            break;
        case Formula::Kind::Not:
            j["op"] = "not";
            j["arg"] = node_to_json(*node.children.front(), vars);
            break;
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            j["op"] = node.kind == Formula::Kind::And ? "and" : "or";
            ordered_json args = ordered_json::array();
            for (const auto& c : node.children) args.push_back(node_to_json(*c, vars));
            j["args"] = std::move(args);
            break;
        }
    }
    return j;
}

Formula node_from_json(const ordered_json& j, const std::vector<std::string>& vars,
                       unsigned arity) {
    const std::string op = j.at("op").get<std::string>();
    if (op == "true") return Formula::verum(arity);
    if (op == "false") return Formula::falsum(arity);
    if (op == "atom") {
        Polynomial p = parse_poly(j.at("poly").get<std::string>(), vars);
        return Formula::atom(std::move(p), rel_from_name(j.at("rel").get<std::string>()));
    }
    if (op == "not") return Formula::negation(node_from_json(j.at("arg"), vars, arity));
    if (op == "and" || op == "or") {
        std::vector<Formula> parts;
        for (const auto& a : j.at("args")) parts.push_back(node_from_json(a, vars, arity));
        return op == "and" ? Formula::conjunction(std::move(parts))
                           : Formula::disjunction(std::move(parts));
    }
    throw std::invalid_argument("formula json: unknown op '" + op + "'");
}

}   // namespace

std::string Formula::to_json(const std::vector<std::string>& vars) const {
    if (vars.size() != arity_) throw std::invalid_argument("to_json: variable list arity mismatch");
    ordered_json j;
    j["arity"] = arity_;
    ordered_json names = ordered_json::array();
    for (const auto& v : vars) names.push_back(v);
    j["vars"] = std::move(names);
    j["node"] = node_to_json(*root_, vars);
    return j.dump();
}

Formula Formula::from_json(const std::string& json_text) {
    ordered_json j = ordered_json::parse(json_text);
    unsigned arity = j.at("arity").get<unsigned>();
    std::vector<std::string> vars;
    if (j.contains("vars")) {
        for (const auto& v : j.at("vars")) vars.push_back(v.get<std::string>());
    } else {
        for (unsigned i = 0; i < arity; ++i) vars.push_back("x" + std::to_string(i + 1));
    }
    if (vars.size() != arity) throw std::invalid_argument("formula json: vars/arity mismatch");
    return node_from_json(j.at("node"), vars, arity);
}

}   // namespace semialg
