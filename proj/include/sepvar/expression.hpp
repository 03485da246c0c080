#pragma once

// Expression front end.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | base ('^' uint)?
//   base   := '(' expr ')' | 'z' | 'x' | 'y' | 't' | 'i' | uint | 'T' '(' uint ')'
//
// '^' binds tighter than unary minus: -z^2 is -(z^2). Exponents are
// nonnegative integer literals; write 1/z^m for negative powers. The four
// variable letters all denote the same variable.

#include "sepvar/rational_function.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sepvar {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

struct Expression {
    enum class Kind { Integer, ImaginaryUnit, Variable, Chebyshev, Negate, Add, Sub, Mul, Div, Pow };
    Kind kind = Kind::Integer;
    BigInt value;          // Integer literal, Chebyshev index or exponent
    std::size_t position = 0;
    std::vector<Expression> children;

    std::string to_string() const;
};

Expression parse_ast(std::string_view text);

/// Throws ParseError on syntax errors and DivisionByZero on division by the zero function.
RationalFunction elaborate(const Expression& e);

RationalFunction parse_expression(std::string_view text);

}  // namespace sepvar
