#pragma once

#include <span>
#include <variant>
#include <vector>

#include "milnor_hodge/frac_poly.hpp"

namespace milnor_hodge {

/// Hodge spectrum of the reduced middle cohomology of a Milnor fiber.
///
/// An exponent a = alpha + p with alpha in [0, 1) records the monodromy
/// eigenvalue exp(2 pi i alpha) and the Hodge level p. Spectra of isolated
/// singularities in m variables have positive multiplicities supported in
/// the open interval (0, m). The unit for Thom-Sebastiani is t^0 with m = 0.
struct Spectrum {
    FracPoly sp;
    int num_vars = 0;

    static Spectrum unit() { return {FracPoly::one(), 0}; }

    /// Hypersurface dimension n = m - 1.
    int dimension() const { return num_vars - 1; }

    friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

struct BrieskornPham {
    std::vector<long> exponents;
};

struct QuasiHomogeneous {
    std::vector<Rational> weights;
};

struct ExplicitSpectrum {
    FracPoly sp;
    int num_vars = 0;
};

/// An isolated hypersurface singularity germ, described by one of the
/// supported normal forms.
struct IsolatedSingularity {
    std::variant<BrieskornPham, QuasiHomogeneous, ExplicitSpectrum> descriptor;

    int num_vars() const;
    int dimension() const { return num_vars() - 1; }
    /// Builds and validates the spectrum.
    Spectrum spectrum() const;
};

/// Spectrum of x_1^{w_1} + ... + x_m^{w_m}: the product over j of
/// t^{1/w_j} + ... + t^{(w_j-1)/w_j}. Throws PreconditionError when some
/// w_j < 2 or the list is empty.
Spectrum brieskorn_pham(std::span<const long> exponents);

/// Spectrum of an isolated quasi-homogeneous singularity with weights
/// w_j in (0, 1/2]: prod_j (t^{w_j} - t) / (1 - t^{w_j}), evaluated by exact
/// division. Weights that do not admit an exact quotient are rejected with
/// PreconditionError.
Spectrum quasi_homogeneous(std::span<const Rational> weights);

/// Wraps a user-supplied spectrum after checking positivity and that the
/// support lies in (0, num_vars).
Spectrum explicit_spectrum(const FracPoly& sp, int num_vars);

/// Spectrum of f(x) + g(y) from the spectra of f and g.
Spectrum thom_sebastiani(const Spectrum& a, const Spectrum& b);

/// Adds one square: f(x) + z^2. Shifts every exponent by 1/2.
Spectrum suspension(const Spectrum& a);

/// Total multiplicity of the spectrum.
Integer milnor_number(const Spectrum& a);

}  // namespace milnor_hodge
