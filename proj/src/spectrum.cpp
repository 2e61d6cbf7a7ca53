#include "milnor_hodge/spectrum.hpp"

#include <string>

#include "milnor_hodge/error.hpp"

namespace milnor_hodge {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

int IsolatedSingularity::num_vars() const {
    return std::visit(Overloaded{
                          [](const BrieskornPham& d) { return static_cast<int>(d.exponents.size()); },
                          [](const QuasiHomogeneous& d) { return static_cast<int>(d.weights.size()); },
                          [](const ExplicitSpectrum& d) { return d.num_vars; },
                      },
                      descriptor);
}

Spectrum IsolatedSingularity::spectrum() const {
    return std::visit(Overloaded{
                          [](const BrieskornPham& d) { return brieskorn_pham(d.exponents); },
                          [](const QuasiHomogeneous& d) { return quasi_homogeneous(d.weights); },
                          [](const ExplicitSpectrum& d) { return explicit_spectrum(d.sp, d.num_vars); },
                      },
                      descriptor);
}

Spectrum brieskorn_pham(std::span<const long> exponents) {
    if (exponents.empty()) throw PreconditionError("Brieskorn-Pham germ needs at least one variable");
    Spectrum out = Spectrum::unit();
    for (long w : exponents) {
        if (w < 2) throw PreconditionError("Brieskorn-Pham exponent " + std::to_string(w) + " < 2");
        FracPoly factor;
        for (long i = 1; i < w; ++i) factor += FracPoly::monomial(1, Rational(i) / Rational(w));
        out = thom_sebastiani(out, Spectrum{factor, 1});
    }
    return out;
}

Spectrum quasi_homogeneous(std::span<const Rational> weights) {
    if (weights.empty()) throw PreconditionError("quasi-homogeneous germ needs at least one weight");
    FracPoly numerator = FracPoly::one();
    FracPoly denominator = FracPoly::one();
    for (const Rational& w : weights) {
        if (w.sign() <= 0 || w > Rational(1, 2))
            throw PreconditionError("quasi-homogeneous weight " + w.to_string() + " outside (0, 1/2]");
        numerator *= FracPoly::monomial(1, w) - FracPoly::monomial(1, Rational(1));
        denominator *= FracPoly::one() - FracPoly::monomial(1, w);
    }
    const FracPoly sp = numerator.divide_exact(denominator);
    const int m = static_cast<int>(weights.size());
    for (const auto& [e, c] : sp.terms()) {
        if (c < 0 || e.sign() <= 0 || e >= Rational(m))
            throw PreconditionError("weights do not define an isolated quasi-homogeneous singularity: quotient " +
                                    sp.to_string());
    }
    return {sp, m};
}

Spectrum explicit_spectrum(const FracPoly& sp, int num_vars) {
    if (num_vars < 1) throw PreconditionError("explicit spectrum needs num_vars >= 1");
    for (const auto& [e, c] : sp.terms()) {
        if (c < 0) throw PreconditionError("negative spectrum multiplicity at t^(" + e.to_string() + ")");
        if (e.sign() <= 0 || e >= Rational(num_vars))
            throw PreconditionError("spectrum exponent " + e.to_string() + " outside (0, " +
                                    std::to_string(num_vars) + ")");
    }
    return {sp, num_vars};
}

Spectrum thom_sebastiani(const Spectrum& a, const Spectrum& b) {
    return {frac_mul(a.sp, b.sp), a.num_vars + b.num_vars};
}

Spectrum suspension(const Spectrum& a) { return {a.sp.shift(Rational(1, 2)), a.num_vars + 1}; }

Integer milnor_number(const Spectrum& a) { return a.sp.coefficient_sum(); }

}  // namespace milnor_hodge
