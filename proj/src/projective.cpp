#include "milnor_hodge/projective.hpp"

#include <algorithm>

#include "milnor_hodge/error.hpp"
#include "milnor_hodge/hodge.hpp"
#include "milnor_hodge/series.hpp"

namespace milnor_hodge {

namespace {

void check_dims(const ProjectiveHypersurface& h) {
    for (const auto& [name, sp] : h.singularities) {
        if (sp.num_vars != h.dim + 1)
            throw SchemaError("singularity '" + name + "' has num_vars " + std::to_string(sp.num_vars) +
                              ", expected n + 1 = " + std::to_string(h.dim + 1));
    }
}

}  // namespace

LaurentPolyY chi_y_virtual(long d, long n, std::size_t min_series_order) {
    if (d < 1) throw PreconditionError("degree must be >= 1");
    if (n < 0) throw PreconditionError("dimension must be >= 0");
    // Only the coefficient of h^n in Q_y(h)^{n+2} / Q_y(dh) is consumed.
    const std::size_t order = std::max(static_cast<std::size_t>(n), min_series_order);
    const TruncatedSeries q = series_q_y(order);
    const TruncatedSeries integrand = q.pow(static_cast<unsigned long>(n + 2)) * q.scale_argument(Rational(d)).inverse();
    return integrand.coeff(static_cast<std::size_t>(n)) * Rational(d);
}

LaurentPolyY chi_y_singular(const ProjectiveHypersurface& h, std::size_t min_series_order) {
    return chi_y_virtual(h.degree, h.dim, min_series_order) - degree_mt(h);
}

LaurentPolyY degree_mt(const ProjectiveHypersurface& h) {
    check_dims(h);
    LaurentPolyY sum;
    for (const auto& [name, sp] : h.singularities) sum += reduced_total_chi(sp).value;
    return sum;
}

}  // namespace milnor_hodge
