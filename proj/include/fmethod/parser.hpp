#ifndef FMETHOD_PARSER_HPP
#define FMETHOD_PARSER_HPP

#include "fmethod/weyl.hpp"

namespace fmethod {

// Parses an operator expression over the given position variables. For a
// variable v the token "v" is multiplication and "dv" is the derivative;
// names listed in params become symbolic coefficients. Supported syntax:
// integer and p/q literals, + - * ^, parentheses, unary minus. Products
// normal-order automatically, so "dx*x" parses to x*dx + 1. Errors throw
// ParseError naming the character position.
WeylElement parse_weyl(const std::string& text, const std::vector<std::string>& vars,
                       const std::vector<std::string>& params = {});

} // namespace fmethod

#endif
