#include "milnor_hodge/laurent.hpp"

#include "milnor_hodge/error.hpp"
#include "term_parser.hpp"

namespace milnor_hodge {

LaurentPolyY::LaurentPolyY(const Rational& constant) { add_term(0, constant); }

LaurentPolyY LaurentPolyY::monomial(const Rational& coeff, long exponent) {
    LaurentPolyY p;
    p.add_term(exponent, coeff);
    return p;
}

LaurentPolyY LaurentPolyY::parse(std::string_view text) {
    LaurentPolyY p;
    detail::parse_term_sum(text, 'y', [&](const Rational& c, const Rational& e) {
        if (!e.is_integer()) throw ParseError("non-integer power of y in '" + std::string(text) + "'");
        p.add_term(to_int64(e), c);
    });
    return p;
}

void LaurentPolyY::add_term(long exponent, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational LaurentPolyY::coeff(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

long LaurentPolyY::degree() const {
    if (terms_.empty()) throw PreconditionError("degree of the zero polynomial");
    return terms_.rbegin()->first;
}

long LaurentPolyY::low_degree() const {
    if (terms_.empty()) throw PreconditionError("low degree of the zero polynomial");
    return terms_.begin()->first;
}

Rational LaurentPolyY::eval(const Rational& y0) const {
    if (y0.is_zero()) {
        if (!terms_.empty() && terms_.begin()->first < 0)
            throw PreconditionError("pole: " + to_string() + " evaluated at y = 0");
        return coeff(0);
    }
    Rational sum(0);
    for (const auto& [e, c] : terms_) sum += c * y0.pow(e);
    return sum;
}

LaurentPolyY LaurentPolyY::invert_variable() const {
    LaurentPolyY p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
    return p;
}

LaurentPolyY LaurentPolyY::shift(long k) const {
    LaurentPolyY p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e + k, c);
    return p;
}

LaurentPolyY LaurentPolyY::pow(unsigned long exponent) const {
    LaurentPolyY result(1);
    LaurentPolyY base = *this;
    while (exponent != 0) {
        if (exponent & 1UL) result *= base;
        exponent >>= 1;
        if (exponent != 0) base *= base;
    }
    return result;
}

std::string LaurentPolyY::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = c.abs();
        if (e == 0) {
            out += mag.to_string();
            continue;
        }
        if (mag != Rational(1)) out += mag.to_string() + "*";
        out += "y";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

LaurentPolyY& LaurentPolyY::operator+=(const LaurentPolyY& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPolyY& LaurentPolyY::operator-=(const LaurentPolyY& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPolyY& LaurentPolyY::operator*=(const LaurentPolyY& o) {
    LaurentPolyY product;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) product.add_term(ea + eb, ca * cb);
    *this = std::move(product);
    return *this;
}

LaurentPolyY& LaurentPolyY::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

}  // namespace milnor_hodge
