#include "milnor_hodge/series.hpp"

#include <algorithm>

#include "milnor_hodge/error.hpp"

namespace milnor_hodge {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<LaurentPolyY> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw PreconditionError("truncated series needs at least one coefficient");
}

const LaurentPolyY& TruncatedSeries::coeff(std::size_t k) const {
    static const LaurentPolyY zero;
    return k < coeffs_.size() ? coeffs_[k] : zero;
}

TruncatedSeries TruncatedSeries::truncate(std::size_t order) const {
    std::vector<LaurentPolyY> c(order + 1);
    for (std::size_t k = 0; k <= order; ++k) c[k] = coeff(k);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::scale_argument(const Rational& lambda) const {
    TruncatedSeries out = *this;
    Rational factor(1);
    for (auto& c : out.coeffs_) {
        c *= factor;
        factor *= lambda;
    }
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    const LaurentPolyY& c0 = coeffs_.front();
    if (!c0.is_monomial())
        throw PreconditionError("series inverse needs a unit constant term, got " + c0.to_string());
    const auto& [e0, v0] = *c0.terms().begin();
    const LaurentPolyY c0_inv = LaurentPolyY::monomial(v0.inverse(), -e0);

    // b_0 = c0^{-1}, b_k = -c0^{-1} * sum_{j=1..k} a_j b_{k-j}
    std::vector<LaurentPolyY> b(coeffs_.size());
    b[0] = c0_inv;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        LaurentPolyY acc;
        for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * b[k - j];
        b[k] = -(c0_inv * acc);
    }
    return TruncatedSeries(std::move(b));
}

TruncatedSeries TruncatedSeries::pow(unsigned long exponent) const {
    std::vector<LaurentPolyY> unit(coeffs_.size());
    unit[0] = LaurentPolyY(1);
    TruncatedSeries result(std::move(unit));
    TruncatedSeries base = *this;
    while (exponent != 0) {
        if (exponent & 1UL) result *= base;
        exponent >>= 1;
        if (exponent != 0) base *= base;
    }
    return result;
}

std::vector<Rational> TruncatedSeries::eval_y(const Rational& y0) const {
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.eval(y0));
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
    const std::size_t n = std::min(coeffs_.size(), o.coeffs_.size());
    std::vector<LaurentPolyY> product(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) product[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(product);
    return *this;
}

std::vector<Rational> todd_series_coefficients(std::size_t order) {
    // (1 - e^{-u}) / u = sum_k (-1)^k u^k / (k+1)!, then invert.
    std::vector<LaurentPolyY> denom(order + 1);
    Rational factorial(1);
    for (std::size_t k = 0; k <= order; ++k) {
        factorial *= Rational(static_cast<long>(k + 1));
        denom[k] = LaurentPolyY((k % 2 == 0 ? Rational(1) : Rational(-1)) / factorial);
    }
    const TruncatedSeries inv = TruncatedSeries(std::move(denom)).inverse();
    std::vector<Rational> out;
    out.reserve(order + 1);
    for (const auto& c : inv.coefficients()) out.push_back(c.coeff(0));
    return out;
}

TruncatedSeries series_q_y(std::size_t order) {
    // With u = alpha(1+y): u/(1-e^{-u}) = sum_k b_k (1+y)^k alpha^k, and the
    // -alpha*y correction only touches the linear term.
    const std::vector<Rational> todd = todd_series_coefficients(order);
    const LaurentPolyY one_plus_y = LaurentPolyY(1) + LaurentPolyY::y();
    std::vector<LaurentPolyY> c(order + 1);
    LaurentPolyY power(1);
    for (std::size_t k = 0; k <= order; ++k) {
        c[k] = todd[k] * power;
        power *= one_plus_y;
    }
    if (order >= 1) c[1] -= LaurentPolyY::y();
    return TruncatedSeries(std::move(c));
}

}  // namespace milnor_hodge
