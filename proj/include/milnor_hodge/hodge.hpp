#pragma once

#include <string>
#include <vector>

#include "milnor_hodge/laurent.hpp"
#include "milnor_hodge/spectrum.hpp"

namespace milnor_hodge {

struct HodgeEntry {
    long p = 0;
    long q = 0;
    long weight = 0;
    bool unipotent = false;
    Integer dim;

    friend bool operator==(const HodgeEntry&, const HodgeEntry&) = default;
};

/// Hodge numbers h^{p,q} of the mixed Hodge structure on H^n(F_x), split by
/// whether the monodromy eigenvalue is 1. Entries are sorted by
/// (weight, p, q, unipotent) and unique in that key.
struct HodgeTable {
    long n = 0;
    std::vector<HodgeEntry> entries;

    /// Sum of dims over all entries with the given (p, q).
    Integer h(long p, long q) const;
    Integer total_dim() const;
    /// Checks the invariants of tables produced from quasi-homogeneous spectra:
    /// p + q = weight, weight n (resp. n + 1) off (resp. on) the unipotent part,
    /// positive dims and h^{p,q} = h^{q,p}.
    bool satisfies_generated_invariants() const;

    friend bool operator==(const HodgeTable&, const HodgeTable&) = default;
};

/// Sorts and merges entries; rejects p + q != weight or dim <= 0 with
/// SchemaError. Weights are otherwise unrestricted so arbitrary mixed tables
/// can be fed to signature_steenbrink.
HodgeTable make_hodge_table(long n, std::vector<HodgeEntry> entries);

enum class ChiMeaning {
    reduced_middle,  ///< chi_y of the reduced middle cohomology
    reduced_total,   ///< chi_y of the full reduced cohomology
    total,           ///< chi_y of the unreduced cohomology
    ih_cone,         ///< chi_y of the intersection cohomology of an open cone on a link
};

std::string to_string(ChiMeaning meaning);

struct ChiClass {
    LaurentPolyY value;
    ChiMeaning meaning = ChiMeaning::reduced_middle;

    friend bool operator==(const ChiClass&, const ChiClass&) = default;
};

/// chi_y of the reduced middle cohomology: each t^b contributes (-y)^floor(b).
ChiClass chi_y_of_spectrum(const Spectrum& a);

/// (-1)^n times the middle class, n = num_vars - 1. Requires num_vars >= 1.
ChiClass reduced_total_chi(const Spectrum& a);

/// reduced_total_chi + 1.
ChiClass total_chi(const Spectrum& a);

/// Places t^b at (p, q) = (floor b, n - floor b), weight n, for non-integral b
/// and at (b, n + 1 - b), weight n + 1, unipotent, for integral b. Requires
/// positive multiplicities supported in (0, m).
HodgeTable hodge_table(const Spectrum& a);

/// Steenbrink's formula
///   sigma = sum_{p+q=n} (-1)^p (h^{p,q} + 2 sum_{i>=1} (-1)^i h^{p+i,q+i});
/// zero for odd n.
Rational signature_steenbrink(const HodgeTable& h);

/// chi_y of the reduced middle cohomology at y = 1.
Rational chi_one(const Spectrum& a);

/// Whether chi_one equals the Steenbrink signature. This identity holds when
/// the hypersurface is a rational homology manifold near the point.
bool rhm_signature_check(const Spectrum& a);

/// True iff Gr^0_F H^n(F_x) = 0, i.e. no spectrum exponent lies in (0, 1).
/// A necessary condition for an isolated Du Bois singularity.
bool du_bois_test(const Spectrum& a);

}  // namespace milnor_hodge
