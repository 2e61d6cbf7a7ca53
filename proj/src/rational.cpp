#include "milnor_hodge/rational.hpp"

#include <cctype>
#include <limits>

#include "milnor_hodge/error.hpp"

namespace milnor_hodge {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Integer parse_integer(std::string_view text) {
    text = trim(text);
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    return Integer(s, 10);
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(text.substr(0, slash)), den);
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Integer Rational::ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Rational result(1);
    Rational base = *this;
    auto e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if (e & 1UL) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::string Rational::to_string() const { return v_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw PreconditionError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::int64_t to_int64(const Integer& z) {
    if (!mpz_fits_slong_p(z.get_mpz_t())) throw PreconditionError("integer " + z.get_str() + " out of range");
    return static_cast<std::int64_t>(z.get_si());
}

std::int64_t to_int64(const Rational& r) {
    if (!r.is_integer()) throw PreconditionError("value " + r.to_string() + " is not an integer");
    return to_int64(r.num());
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace milnor_hodge
