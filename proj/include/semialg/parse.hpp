#pragma once

#include "semialg/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace semialg {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

/// Parse an arithmetic expression over the named variables into canonical
/// sparse form. Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' NAT)?
///   base   := NAT | NAT '/' NAT | VAR | '(' expr ')'
/// Whitespace is insignificant.
Polynomial parse_poly(const std::string& text, const std::vector<std::string>& vars);

}   // namespace semialg
