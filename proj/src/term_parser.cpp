#include "term_parser.hpp"

#include <cctype>
#include <string>

#include "milnor_hodge/error.hpp"

namespace milnor_hodge::detail {

namespace {

class Cursor {
public:
    Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Integer unsigned_integer() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    Rational unsigned_rational() {
        Integer num = unsigned_integer();
        if (accept('/')) {
            Integer den = unsigned_integer();
            if (den == 0) fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    Rational signed_rational() {
        bool negative = false;
        while (peek() == '-' || peek() == '+') negative ^= (text_[pos_++] == '-');
        Rational r = unsigned_rational();
        return negative ? -r : r;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

void parse_term_sum(std::string_view text, char variable,
                    const std::function<void(const Rational&, const Rational&)>& on_term) {
    Cursor cur(text);
    if (cur.done()) throw ParseError("empty polynomial text");
    bool first = true;
    while (!cur.done()) {
        bool negative = false;
        if (cur.accept('-')) {
            negative = true;
        } else if (!cur.accept('+') && !first) {
            cur.fail("expected '+' or '-'");
        }
        first = false;

        Rational coeff(1);
        bool has_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff = cur.unsigned_rational();
            has_coeff = true;
            cur.accept('*');
        }
        Rational exponent(0);
        if (cur.accept(variable)) {
            exponent = Rational(1);
            if (cur.accept('^')) {
                if (cur.accept('(')) {
                    exponent = cur.signed_rational();
                    cur.expect(')');
                } else {
                    exponent = cur.signed_rational();
                }
            }
        } else if (!has_coeff) {
            cur.fail(std::string("expected a coefficient or '") + variable + "'");
        }
        on_term(negative ? -coeff : coeff, exponent);
    }
}

}  // namespace milnor_hodge::detail
