#include "fmethod/parser.hpp"

#include <algorithm>
#include <cctype>

#include "fmethod/util.hpp"

namespace fmethod {

namespace {

// Hand-rolled recursive descent over a character cursor; the grammar is tiny
// and positions in ParseError messages matter more than parser generality.
struct Cursor {
    const std::string& text;
    size_t pos = 0;
    const std::vector<std::string>& vars;
    const std::vector<std::string>& params;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw ParseError(cat(why, " at position ", pos + 1));
    }

    WeylElement one(const RatFunc& c) { return WeylElement::constant(vars, params, c); }

    std::string scan_digits() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return text.substr(start, pos - start);
    }

    std::string scan_name() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }

    WeylElement parse_primary() {
        char c = peek();
        if (c == '(') {
            ++pos;
            WeylElement e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = scan_digits();
            std::string den = "1";
            size_t save = pos;
            if (eat('/')) {
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    den = scan_digits();
                } else {
                    pos = save; // '/' belonged to something else; let the caller fail there
                }
            }
            return one(RatFunc::constant(params, BigRat::from_string(num + "/" + den)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            std::string name = scan_name();
            auto find = [](const std::vector<std::string>& xs, const std::string& s) {
                return std::find(xs.begin(), xs.end(), s);
            };
            if (auto it = find(vars, name); it != vars.end())
                return WeylElement::position(vars, params, it - vars.begin());
            if (name.size() > 1 && name[0] == 'd') {
                std::string base = name.substr(1);
                if (auto it = find(vars, base); it != vars.end())
                    return WeylElement::derivative(vars, params, it - vars.begin());
            }
            if (auto it = find(params, name); it != params.end())
                return one(RatFunc::variable(params, it - params.begin()));
            pos = start;
            fail(cat("unknown symbol '", name, "'"));
        }
        fail(c ? cat("unexpected character '", std::string(1, c), "'") : "unexpected end of input");
    }

    WeylElement parse_factor() {
        WeylElement base = parse_primary();
        if (!eat('^')) return base;
        unsigned long e = std::stoul(scan_digits());
        WeylElement acc = one(RatFunc::constant(params, BigRat(1)));
        for (unsigned long i = 0; i < e; ++i) acc = weyl_mul(acc, base);
        return acc;
    }

    WeylElement parse_term() {
        int sign = 1;
        while (true) {
            if (eat('-'))
                sign = -sign;
            else if (!eat('+'))
                break;
        }
        WeylElement acc = parse_factor();
        while (eat('*')) acc = weyl_mul(acc, parse_factor());
        if (sign < 0) acc.scale(RatFunc::constant(params, BigRat(-1)));
        return acc;
    }

    WeylElement parse_expr() {
        WeylElement acc = parse_term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                acc += parse_term();
            } else if (c == '-') {
                // leave the sign for parse_term's unary handling
                acc += parse_term();
            } else {
                return acc;
            }
        }
    }
};

} // namespace

WeylElement parse_weyl(const std::string& text, const std::vector<std::string>& vars,
                       const std::vector<std::string>& params) {
    Cursor c{text, 0, vars, params};
    if (c.eof()) throw ParseError("empty expression at position 1");
    WeylElement e = c.parse_expr();
    if (!c.eof()) c.fail("trailing input");
    return e;
}

} // namespace fmethod
