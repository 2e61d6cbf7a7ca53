#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "milnor_hodge/hodge.hpp"
#include "milnor_hodge/laurent.hpp"
#include "milnor_hodge/spectrum.hpp"

namespace milnor_hodge {

/// Formal Q[y, 1/y]-linear combination of opaque stratum-closure symbols,
/// standing for a homology class with polynomial coefficients. Symbols are
/// identified by name only.
class StratifiedClass {
public:
    using Terms = std::map<std::string, LaurentPolyY>;

    StratifiedClass() = default;
    static StratifiedClass symbol(const std::string& name, const LaurentPolyY& coeff = LaurentPolyY(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LaurentPolyY coeff(const std::string& name) const;
    /// Coefficients evaluated at y = y0.
    std::map<std::string, Rational> eval(const Rational& y0) const;

    /// "(1 - y)*[V] + y*[p]"; the zero class is "0".
    std::string to_string() const;

    StratifiedClass& operator+=(const StratifiedClass& o);
    StratifiedClass& operator-=(const StratifiedClass& o);
    StratifiedClass& operator*=(const LaurentPolyY& c);

    friend StratifiedClass operator+(StratifiedClass a, const StratifiedClass& b) { return a += b; }
    friend StratifiedClass operator-(StratifiedClass a, const StratifiedClass& b) { return a -= b; }
    friend StratifiedClass operator*(StratifiedClass a, const LaurentPolyY& c) { return a *= c; }
    friend StratifiedClass operator*(const LaurentPolyY& c, StratifiedClass a) { return a *= c; }

    friend bool operator==(const StratifiedClass&, const StratifiedClass&) = default;
    friend std::ostream& operator<<(std::ostream& os, const StratifiedClass& c) { return os << c.to_string(); }

private:
    void add(const std::string& name, const LaurentPolyY& c);

    Terms terms_;
};

/// Per-stratum data of a Whitney stratification. Classes of closures and all
/// cone-link chi_y values are inputs; nothing here is derived from equations.
struct Stratum {
    std::string name;
    int dim = 0;
    bool singular = false;

    std::optional<StratifiedClass> t_closure;   ///< T_y of the closure
    std::optional<StratifiedClass> t_boundary;  ///< T_y of closure minus stratum
    std::optional<StratifiedClass> it_closure;  ///< IT_y of the closure

    /// Transversal Milnor fiber spectrum (num_vars = n - dim + 1).
    std::optional<Spectrum> milnor_spectrum;
    /// Alternatively chi_y of the reduced cohomology of F_v, given directly.
    std::optional<LaurentPolyY> milnor_chi;

    /// chi_y of IH of the open cone on the link of W in this closure, keyed by W.
    std::map<std::string, LaurentPolyY> ih_cone_link_chi;
    /// chi_y of IH of the open cone on the link of this stratum in X.
    std::optional<LaurentPolyY> ih_cone_link_in_x;
};

/// Strata plus the strict partial order W < V (W inside the closure of V,
/// minus V). The supplied relation is closed transitively on construction.
class Stratification {
public:
    /// Validates names, order references, acyclicity and dimensions; throws
    /// SchemaError. ambient_dim (n) is optional; when present every singular
    /// stratum must have dim < n and a matching transversal spectrum.
    /// Refuses data declared to have nontrivial monodromy along strata.
    Stratification(std::vector<Stratum> strata, std::vector<std::pair<std::string, std::string>> order,
                   std::optional<int> ambient_dim = std::nullopt, bool monodromy_trivial = true);

    const std::vector<Stratum>& strata() const { return strata_; }
    const Stratum& stratum(const std::string& name) const;
    std::optional<int> ambient_dim() const { return ambient_dim_; }
    /// The original (non-closed) relation, in input order.
    const std::vector<std::pair<std::string, std::string>>& order_pairs() const { return pairs_; }

    bool less(const std::string& lower, const std::string& upper) const;
    /// Strata strictly below the named one, by name.
    std::vector<std::string> below(const std::string& name) const;
    /// Singular strata, in a deterministic linear extension of the order.
    std::vector<std::string> singular_linear_extension() const;
    /// True iff the sequence lists every singular stratum once and never puts
    /// a stratum before one below it.
    bool is_linear_extension(const std::vector<std::string>& sequence) const;

    /// chi_y of the reduced cohomology of the Milnor fiber at a point of the
    /// stratum: the direct value when supplied, otherwise the reduced total
    /// chi_y of the transversal spectrum. Throws SchemaError when absent.
    LaurentPolyY milnor_reduced_chi(const std::string& name) const;

private:
    std::size_t index(const std::string& name) const;

    std::vector<Stratum> strata_;
    std::vector<std::pair<std::string, std::string>> pairs_;
    std::map<std::string, std::size_t> by_name_;
    std::vector<std::vector<bool>> less_;  // less_[w][v]: w < v
    std::optional<int> ambient_dim_;
};

/// Milnor-Hirzebruch class of a hypersurface with isolated singularities:
/// sum over points of (-1)^n chi_y(H^n-tilde(F_x)) [x]. All spectra must share
/// num_vars; throws SchemaError otherwise.
StratifiedClass mt_isolated(const std::vector<std::pair<std::string, Spectrum>>& sings);

/// Smooth connected simply-connected singular locus Sigma of dimension r in an
/// n-dimensional hypersurface, with transversal singularity spectrum:
///   (-1)^{n-r} chi_y(H^{n-r}(F_N)) * T_sigma.
/// Requires r < n, transversal.num_vars = n - r + 1 and T_sigma nonzero.
StratifiedClass mt_smooth_locus(const Spectrum& transversal, int n, int r, const StratifiedClass& t_sigma);

/// sum over singular V of (T_y(closure V) - T_y(closure V minus V)) * chi_y(H-tilde(F_v)).
StratifiedClass mt_stratified_direct(const Stratification& s);

/// Link-corrected intersection classes, by the recursion
///   IT-hat(V) = IT_y(closure V) - sum_{W < V} IT-hat(W) * I chi_y(cone on L_{W,V}),
/// evaluated along `order` (a linear extension of the singular strata) or a
/// deterministic one when omitted.
std::map<std::string, StratifiedClass> it_hat(const Stratification& s,
                                              const std::optional<std::vector<std::string>>& order = std::nullopt);

/// sum over singular V of IT-hat(V) * chi_y(H-tilde(F_v)).
StratifiedClass mt_stratified_ic(const Stratification& s);

/// T_y(X) - IT_y(X) = sum over singular V of IT-hat(V) * (1 - I chi_y(cone on L_{V,X})).
StratifiedClass t_minus_it(const Stratification& s);

struct IsolatedIcPoint {
    std::string name;
    Spectrum spectrum;
    LaurentPolyY ih_cone_chi;
};

/// Intersection Milnor-Hirzebruch class for isolated singularities:
/// sum over points of (chi_y(H^*(F_x)) - I chi_y(cone on L_x)) [x].
StratifiedClass mit_isolated(const std::vector<IsolatedIcPoint>& sings);

struct MitResult {
    /// sum (T_y(closure V) - T_y(closure V minus V)) * (chi_y(H^*(F_v)) - I chi_y(cone on L_{V,X})).
    StratifiedClass direct;
    /// The same sum weighted by IT-hat, when IT data is available.
    std::optional<StratifiedClass> it_hat_form;
    bool forms_agree() const { return it_hat_form && *it_hat_form == direct; }
};

MitResult mit_stratified(const Stratification& s);

/// Consistency of user-supplied class data with the identities the formulas
/// rely on.
struct ConsistencyReport {
    struct Line {
        std::string check;
        bool ok = false;
        std::string detail;
    };
    std::vector<Line> lines;
    bool all_ok() const;
};

/// Checks, where data allows: additivity T_y(closure V minus V) = sum of
/// open-stratum classes below V; the closure identity
/// T_y(closure V) - IT_y(closure V) = sum_{W<V} IT-hat(W)(1 - I chi_y(cone on L_{W,V}));
/// agreement of the direct and IT-hat forms of MT_y and MIT_y.
ConsistencyReport consistency_report(const Stratification& s);

}  // namespace milnor_hodge
