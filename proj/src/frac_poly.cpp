#include "milnor_hodge/frac_poly.hpp"

#include <vector>

#include "milnor_hodge/error.hpp"
#include "term_parser.hpp"

namespace milnor_hodge {

namespace {

// Dense coefficients of p in s = t^(1/lattice), shifted so index 0 holds the
// lowest exponent.
std::vector<Rational> to_dense(const FracPoly& p, const Integer& lattice) {
    const Rational low = p.min_exponent();
    const Rational span = (p.max_exponent() - low) * Rational(lattice);
    std::vector<Rational> dense(static_cast<std::size_t>(to_int64(span)) + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) {
        const auto idx = static_cast<std::size_t>(to_int64((e - low) * Rational(lattice)));
        dense[idx] = Rational(c);
    }
    return dense;
}

}  // namespace

FracPoly FracPoly::monomial(const Integer& coeff, const Rational& exponent) {
    FracPoly p;
    p.add_term(exponent, coeff);
    return p;
}

FracPoly FracPoly::parse(std::string_view text) {
    FracPoly p;
    detail::parse_term_sum(text, 't', [&](const Rational& c, const Rational& e) {
        if (!c.is_integer()) throw ParseError("non-integral multiplicity in '" + std::string(text) + "'");
        p.add_term(e, c.num());
    });
    return p;
}

void FracPoly::add_term(const Rational& exponent, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer FracPoly::coeff(const Rational& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

Integer FracPoly::coefficient_sum() const {
    Integer sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

Rational FracPoly::min_exponent() const {
    if (terms_.empty()) throw PreconditionError("exponent range of the zero element");
    return terms_.begin()->first;
}

Rational FracPoly::max_exponent() const {
    if (terms_.empty()) throw PreconditionError("exponent range of the zero element");
    return terms_.rbegin()->first;
}

FracPoly FracPoly::shift(const Rational& a) const {
    FracPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e + a, c);
    return p;
}

FracPoly FracPoly::divide_exact(const FracPoly& divisor) const {
    if (divisor.is_zero()) throw PreconditionError("division by the zero element of Z[Q]");
    if (is_zero()) return {};

    Integer lattice = 1;
    for (const auto* p : {this, &divisor})
        for (const auto& [e, c] : p->terms()) lattice = lcm(lattice, e.den());

    std::vector<Rational> rem = to_dense(*this, lattice);
    const std::vector<Rational> div = to_dense(divisor, lattice);
    const auto fail = [&] {
        throw PreconditionError("non-exact division: (" + to_string() + ") / (" + divisor.to_string() + ")");
    };
    if (rem.size() < div.size()) fail();

    std::vector<Rational> quot(rem.size() - div.size() + 1, Rational(0));
    const Rational& lead = div.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Rational q = rem[k + div.size() - 1] / lead;
        if (q.is_zero()) continue;
        quot[k] = q;
        for (std::size_t j = 0; j < div.size(); ++j) rem[k + j] -= q * div[j];
    }
    for (const auto& r : rem)
        if (!r.is_zero()) fail();

    const Rational base = min_exponent() - divisor.min_exponent();
    const Rational step = Rational(1, lattice);
    FracPoly out;
    for (std::size_t k = 0; k < quot.size(); ++k) {
        if (quot[k].is_zero()) continue;
        if (!quot[k].is_integer()) fail();
        out.add_term(base + step * Rational(static_cast<long>(k)), quot[k].num());
    }
    return out;
}

std::string FracPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Integer mag = abs(c);
        if (e.is_zero()) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += "t^";
        out += e.is_integer() ? e.to_string() : "(" + e.to_string() + ")";
    }
    return out;
}

FracPoly& FracPoly::operator+=(const FracPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

FracPoly& FracPoly::operator-=(const FracPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

FracPoly& FracPoly::operator*=(const FracPoly& o) {
    FracPoly product;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) product.add_term(ea + eb, ca * cb);
    *this = std::move(product);
    return *this;
}

}  // namespace milnor_hodge
