#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace milnor_hodge {

using Integer = mpz_class;

/// Parses a decimal integer with optional sign. Throws ParseError.
Integer parse_integer(std::string_view text);

/// Exact fraction num/den with den > 0 and gcd(|num|, den) = 1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& value) : v_(value) {}  // NOLINT(google-explicit-constructor)
    /// Throws PreconditionError when den == 0.
    Rational(const Integer& num, const Integer& den);

    /// Accepts "a", "-a", "a/b". Throws ParseError.
    static Rational parse(std::string_view text);

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Greatest integer <= value.
    Integer floor() const;
    /// Least integer >= value.
    Integer ceil() const;

    Rational abs() const;
    /// Throws PreconditionError on zero.
    Rational inverse() const;
    Rational pow(long exponent) const;

    /// "a" for integers, "a/b" otherwise.
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.v_ = -a.v_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class v_;
};

/// Converts to a machine integer, throwing PreconditionError on overflow
/// or when the value is not integral.
std::int64_t to_int64(const Rational& r);
std::int64_t to_int64(const Integer& z);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace milnor_hodge
