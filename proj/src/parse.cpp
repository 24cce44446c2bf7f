#include "semialg/parse.hpp"

#include <cctype>

namespace semialg {

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars), arity_(static_cast<unsigned>(vars.size())) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    Polynomial expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        } else if (peek() == '+') {
            ++pos_;
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial factor() {
        Polynomial b = base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (peek() == '-') throw ParseError("negative exponent", pos_);
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected natural exponent after '^'", pos_);
            unsigned long e = read_natural_ul();
            return b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = read_natural();
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    throw ParseError("expected denominator", pos_);
                size_t den_pos = pos_;
                Int den = read_natural();
                if (den == 0) throw ParseError("zero denominator", den_pos);
                return Polynomial::constant(arity_, make_rational(num, den));
            }
            return Polynomial::constant(arity_, Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            for (unsigned i = 0; i < arity_; ++i) {
                if (vars_[i] == name) return Polynomial::variable(arity_, i);
            }
            throw ParseError("unknown variable name '" + name + "'", start);
        }
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Int read_natural() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Int(text_.substr(start, pos_ - start));
    }

    unsigned long read_natural_ul() {
        Int n = read_natural();
        if (!n.fits_ulong_p()) throw ParseError("exponent too large", pos_);
        return n.get_ui();
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    const std::string& text_;
    const std::vector<std::string>& vars_;
    unsigned arity_;
    size_t pos_ = 0;
};

}   // namespace

Polynomial parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    return Parser(text, vars).run();
}

}   // namespace semialg
