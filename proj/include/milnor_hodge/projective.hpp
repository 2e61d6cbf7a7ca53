#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "milnor_hodge/laurent.hpp"
#include "milnor_hodge/spectrum.hpp"

namespace milnor_hodge {

/// Degree-d hypersurface in P^{n+1} with isolated singularities, each given by
/// a spectrum in n + 1 variables.
struct ProjectiveHypersurface {
    long degree = 1;
    long dim = 0;
    std::vector<std::pair<std::string, Spectrum>> singularities;
};

/// chi_y of a smooth degree-d hypersurface of dimension n, obtained as the
/// coefficient of h^{n+1} in d*h * Q_y(h)^{n+2} / Q_y(d*h) on P^{n+1}.
/// min_series_order only raises the internal truncation (diagnostics); the
/// result does not depend on it. Throws PreconditionError for d < 1 or n < 0.
LaurentPolyY chi_y_virtual(long d, long n, std::size_t min_series_order = 0);

/// chi_y(X) = chi_y(X_t) - sum over singular points of chi_y(H-tilde^*(F_x)).
LaurentPolyY chi_y_singular(const ProjectiveHypersurface& h, std::size_t min_series_order = 0);

/// Degree of the Milnor-Hirzebruch class: sum over points of chi_y(H-tilde^*(F_x)).
LaurentPolyY degree_mt(const ProjectiveHypersurface& h);

}  // namespace milnor_hodge
