#include "sepvar/expression.hpp"

#include <cctype>

namespace sepvar {

namespace {

// Exponents and Chebyshev indices beyond this are rejected before expansion.
constexpr unsigned long kMaxExponent = 4096;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expression parse() {
        Expression e = expr();
        skip();
        if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return e;
    }

private:
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= text_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
    }

    Expression node(Expression::Kind kind, std::size_t at, std::vector<Expression> children = {}) {
        Expression e;
        e.kind = kind;
        e.position = at;
        e.children = std::move(children);
        return e;
    }

    BigInt uint_literal() {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected an unsigned integer", start);
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    Expression expr() {
        Expression lhs = term();
        while (true) {
            skip();
            std::size_t at = pos_;
            if (accept('+')) {
                lhs = node(Expression::Kind::Add, at, {std::move(lhs), term()});
            } else if (accept('-')) {
                lhs = node(Expression::Kind::Sub, at, {std::move(lhs), term()});
            } else {
                return lhs;
            }
        }
    }

    Expression term() {
        Expression lhs = factor();
        while (true) {
            skip();
            std::size_t at = pos_;
            if (accept('*')) {
                lhs = node(Expression::Kind::Mul, at, {std::move(lhs), factor()});
            } else if (accept('/')) {
                lhs = node(Expression::Kind::Div, at, {std::move(lhs), factor()});
            } else {
                return lhs;
            }
        }
    }

    Expression factor() {
        skip();
        std::size_t at = pos_;
        if (accept('-')) return node(Expression::Kind::Negate, at, {factor()});
        Expression b = base();
        skip();
        at = pos_;
        if (accept('^')) {
            skip();
            if (peek('-')) throw ParseError("negative exponents are not allowed; write 1/z^m", pos_);
            Expression p = node(Expression::Kind::Pow, at, {std::move(b)});
            p.value = uint_literal();
            if (p.value > kMaxExponent) throw ParseError("exponent too large", at);
            return p;
        }
        return b;
    }

    Expression base() {
        skip();
        std::size_t at = pos_;
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Expression e = expr();
            expect(')');
            return e;
        }
        if (c == 'z' || c == 'x' || c == 'y' || c == 't') {
            ++pos_;
            return node(Expression::Kind::Variable, at);
        }
        if (c == 'i') {
            ++pos_;
            return node(Expression::Kind::ImaginaryUnit, at);
        }
        if (c == 'T') {
            ++pos_;
            expect('(');
            Expression e = node(Expression::Kind::Chebyshev, at);
            e.value = uint_literal();
            if (e.value > kMaxExponent) throw ParseError("Chebyshev index too large", at);
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Expression e = node(Expression::Kind::Integer, at);
            e.value = uint_literal();
            return e;
        }
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Expression parse_ast(std::string_view text) {
    return Parser(text).parse();
}

std::string Expression::to_string() const {
    switch (kind) {
        case Kind::Integer: return value.get_str();
        case Kind::ImaginaryUnit: return "i";
        case Kind::Variable: return "z";
        case Kind::Chebyshev: return "T(" + value.get_str() + ")";
        case Kind::Negate: return "-(" + children[0].to_string() + ")";
        case Kind::Pow: return "(" + children[0].to_string() + ")^" + value.get_str();
        case Kind::Add: return "(" + children[0].to_string() + " + " + children[1].to_string() + ")";
        case Kind::Sub: return "(" + children[0].to_string() + " - " + children[1].to_string() + ")";
        case Kind::Mul: return "(" + children[0].to_string() + "*" + children[1].to_string() + ")";
        case Kind::Div: return "(" + children[0].to_string() + ")/(" + children[1].to_string() + ")";
    }
    return "";
}

RationalFunction elaborate(const Expression& e) {
    using K = Expression::Kind;
    switch (e.kind) {
        case K::Integer: return RationalFunction(GaussianRational(BigRational(e.value)));
        case K::ImaginaryUnit: return RationalFunction(GaussianRational::i());
        case K::Variable: return RationalFunction::identity();
        case K::Chebyshev: return RationalFunction(chebyshev(static_cast<unsigned>(e.value.get_ui())));
        case K::Negate: return -elaborate(e.children[0]);
        case K::Pow: return elaborate(e.children[0]).pow(static_cast<unsigned>(e.value.get_ui()));
        case K::Add: return elaborate(e.children[0]) + elaborate(e.children[1]);
        case K::Sub: return elaborate(e.children[0]) - elaborate(e.children[1]);
        case K::Mul: return elaborate(e.children[0]) * elaborate(e.children[1]);
        case K::Div: {
            RationalFunction d = elaborate(e.children[1]);
            if (d.is_zero()) throw DivisionByZero("division by the zero function at position " + std::to_string(e.position));
            return elaborate(e.children[0]) / d;
        }
    }
    throw std::logic_error("unknown expression kind");
}

RationalFunction parse_expression(std::string_view text) {
    return elaborate(parse_ast(text));
}

}  // namespace sepvar
