#pragma once

#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "milnor_hodge/rational.hpp"

namespace milnor_hodge {

/// Element of the group ring Z[Q]: a finite integer combination of t^a with
/// rational exponents a. Exponents are kept as reduced rationals and terms in
/// ascending exponent order; zero coefficients are pruned.
class FracPoly {
public:
    using Terms = std::map<Rational, Integer>;

    FracPoly() = default;

    static FracPoly monomial(const Integer& coeff, const Rational& exponent);
    /// t^0.
    static FracPoly one() { return monomial(1, Rational(0)); }

    /// Parses the canonical rendering, e.g. "t^(5/6) + 2*t^(7/6) - t^-1 + 3".
    static FracPoly parse(std::string_view text);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coeff(const Rational& exponent) const;
    /// Sum of coefficients, i.e. the value at t = 1.
    Integer coefficient_sum() const;
    /// Smallest and largest exponent. Throw PreconditionError on zero.
    Rational min_exponent() const;
    Rational max_exponent() const;

    /// Multiplies by t^a.
    FracPoly shift(const Rational& a) const;

    /// Quotient q with q * divisor == *this. Throws PreconditionError when the
    /// divisor is zero or the division leaves a remainder or a non-integral
    /// coefficient; never truncates.
    FracPoly divide_exact(const FracPoly& divisor) const;

    /// "m1*t^(a/b) + ..." ascending; integral exponents print as "t^k", t^0 as
    /// its bare coefficient; zero is "0".
    std::string to_string() const;

    FracPoly& operator+=(const FracPoly& o);
    FracPoly& operator-=(const FracPoly& o);
    FracPoly& operator*=(const FracPoly& o);

    friend FracPoly operator+(FracPoly a, const FracPoly& b) { return a += b; }
    friend FracPoly operator-(FracPoly a, const FracPoly& b) { return a -= b; }
    friend FracPoly operator*(FracPoly a, const FracPoly& b) { return a *= b; }

    friend bool operator==(const FracPoly& a, const FracPoly& b) { return a.terms_ == b.terms_; }
    friend std::ostream& operator<<(std::ostream& os, const FracPoly& p) { return os << p.to_string(); }

private:
    void add_term(const Rational& exponent, const Integer& c);

    Terms terms_;
};

/// Group-ring product (exponent convolution).
inline FracPoly frac_mul(const FracPoly& a, const FracPoly& b) { return a * b; }

}  // namespace milnor_hodge
