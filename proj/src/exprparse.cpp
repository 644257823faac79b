#include <cctype>

#include "korbit/expression.hpp"

namespace korbit {

namespace {

struct Parser {
    TablePtr tab;
    const std::string& text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::ParseError,
                    what + " at offset " + std::to_string(pos) + " in '" + text + "'");
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Expression parse_expr() {
        Expression e = parse_term();
        while (true) {
            if (accept('+'))
                e = e + parse_term();
            else if (accept('-'))
                e = e - parse_term();
            else
                return e;
        }
    }

    Expression parse_term() {
        Expression e = parse_factor();
        while (true) {
            if (accept('*'))
                e = e * parse_factor();
            else if (accept('/'))
                e = e / parse_factor();
            else
                return e;
        }
    }

    Expression parse_factor() {
        Expression base = parse_base();
        if (accept('^')) {
            skip_ws();
            bool neg = accept('-');
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                fail("expected integer exponent");
            long k = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                k = k * 10 + (text[pos++] - '0');
            return base.pow(static_cast<int>(neg ? -k : k));
        }
        return base;
    }

    Expression parse_base() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of expression");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Expression e = parse_expr();
            expect(')');
            return e;
        }
        if (c == '-') {
            ++pos;
            return -parse_factor();
        }
        if (c == '+') {
            ++pos;
            return parse_factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_name();
        fail("unexpected character");
    }

    Expression parse_rational() {
        mpz_class num = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            num = num * 10 + (text[pos++] - '0');
        return Expression::constant(tab, Scalar(Rational(num)));
    }

    Expression parse_name() {
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        std::string name = text.substr(start, pos - start);
        if (name == "i") return Expression::constant(tab, Scalar::i());
        if (name == "exp") {
            expect('(');
            Expression arg = parse_expr();
            expect(')');
            return exp_of(arg);
        }
        if (!tab->has(name))
            throw Error(ErrorCode::UnknownVariable, "unknown variable '" + name + "'");
        return Expression::variable(tab, tab->id_of(name));
    }

    Expression exp_of(const Expression& arg) {
        if (arg.is_zero()) return Expression::constant(tab, Scalar(1));
        if (!arg.is_polynomial() || arg.num().has_exponentials())
            fail("exp argument must be a linear form");
        LinearForm l;
        for (const auto& [t, c] : arg.num().terms()) {
            if (t.mono.size() != 1 || t.mono.begin()->second != 1)
                fail("exp argument must be a linear form with zero constant");
            l[t.mono.begin()->first] = c;
        }
        return Expression::exponential(tab, l);
    }
};

} // namespace

Expression parse_expression(TablePtr tab, const std::string& text) {
    Parser p{tab, text};
    Expression e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

} // namespace korbit
