#pragma once

#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "milnor_hodge/rational.hpp"

namespace milnor_hodge {

/// Finite Q-linear combination of integer powers of y. Zero coefficients are
/// never stored, so structural equality is value equality.
class LaurentPolyY {
public:
    using Terms = std::map<long, Rational>;

    LaurentPolyY() = default;
    LaurentPolyY(const Rational& constant);  // NOLINT(google-explicit-constructor)
    LaurentPolyY(long constant) : LaurentPolyY(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

    static LaurentPolyY monomial(const Rational& coeff, long exponent);
    static LaurentPolyY y() { return monomial(1, 1); }

    /// Parses the canonical text rendering, e.g. "1 - y + 1/2*y^2 - 3*y^-1".
    static LaurentPolyY parse(std::string_view text);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of y^exponent (zero when absent).
    Rational coeff(long exponent) const;
    /// Highest and lowest exponent. Both throw PreconditionError on zero.
    long degree() const;
    long low_degree() const;
    /// True for a single nonzero term c*y^k.
    bool is_monomial() const { return terms_.size() == 1; }

    /// Exact substitution y = y0. Throws PreconditionError when y0 = 0 meets
    /// a negative exponent.
    Rational eval(const Rational& y0) const;

    /// p(1/y).
    LaurentPolyY invert_variable() const;
    /// y^k * p.
    LaurentPolyY shift(long k) const;
    LaurentPolyY pow(unsigned long exponent) const;

    /// Ascending exponents, e.g. "2 - 20*y + 2*y^2"; the zero polynomial is "0".
    std::string to_string() const;

    LaurentPolyY& operator+=(const LaurentPolyY& o);
    LaurentPolyY& operator-=(const LaurentPolyY& o);
    LaurentPolyY& operator*=(const LaurentPolyY& o);
    LaurentPolyY& operator*=(const Rational& c);

    friend LaurentPolyY operator+(LaurentPolyY a, const LaurentPolyY& b) { return a += b; }
    friend LaurentPolyY operator-(LaurentPolyY a, const LaurentPolyY& b) { return a -= b; }
    friend LaurentPolyY operator*(LaurentPolyY a, const LaurentPolyY& b) { return a *= b; }
    friend LaurentPolyY operator*(LaurentPolyY a, const Rational& c) { return a *= c; }
    friend LaurentPolyY operator*(const Rational& c, LaurentPolyY a) { return a *= c; }
    friend LaurentPolyY operator-(LaurentPolyY a) { return a *= Rational(-1); }

    friend bool operator==(const LaurentPolyY&, const LaurentPolyY&) = default;
    friend std::ostream& operator<<(std::ostream& os, const LaurentPolyY& p) { return os << p.to_string(); }

private:
    void add_term(long exponent, const Rational& c);

    Terms terms_;
};

/// Evaluates p at y0, the free-function spelling used by the CLI and bindings.
inline Rational laurent_eval(const LaurentPolyY& p, const Rational& y0) { return p.eval(y0); }

}  // namespace milnor_hodge
