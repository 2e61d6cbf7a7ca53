#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "milnor_hodge/laurent.hpp"

namespace milnor_hodge {

/// Power series in a formal variable (alpha) with LaurentPolyY coefficients,
/// truncated after alpha^order. All ring operations truncate at the smaller
/// order of their operands.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order);
    /// Coefficients c[0..order]; order = c.size() - 1. Throws on empty input.
    explicit TruncatedSeries(std::vector<LaurentPolyY> coefficients);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<LaurentPolyY>& coefficients() const { return coeffs_; }
    /// Coefficient of alpha^k; zero beyond the truncation order.
    const LaurentPolyY& coeff(std::size_t k) const;

    TruncatedSeries truncate(std::size_t order) const;
    /// alpha -> lambda * alpha, i.e. coefficient k scaled by lambda^k.
    TruncatedSeries scale_argument(const Rational& lambda) const;
    /// Multiplicative inverse. Requires the constant coefficient to be a
    /// unit of Q[y, 1/y] (a single nonzero monomial); throws PreconditionError
    /// otherwise.
    TruncatedSeries inverse() const;
    TruncatedSeries pow(unsigned long exponent) const;
    /// Substitutes y = y0 in every coefficient.
    std::vector<Rational> eval_y(const Rational& y0) const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const TruncatedSeries& o);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<LaurentPolyY> coeffs_;
};

/// Coefficients of u / (1 - e^{-u}) up to u^order (the Todd series).
std::vector<Rational> todd_series_coefficients(std::size_t order);

/// Hirzebruch's characteristic series
///   Q_y(alpha) = alpha(1+y) / (1 - e^{-alpha(1+y)}) - alpha*y
/// truncated after alpha^order. Constant term 1, linear term (1-y)/2.
TruncatedSeries series_q_y(std::size_t order);

}  // namespace milnor_hodge
