#include "milnor_hodge/hodge.hpp"

#include <map>
#include <tuple>

#include "milnor_hodge/error.hpp"

namespace milnor_hodge {

namespace {

LaurentPolyY minus_y_power(long k) { return LaurentPolyY::monomial(k % 2 == 0 ? 1 : -1, k); }

long floor_long(const Rational& r) { return static_cast<long>(to_int64(r.floor())); }

}  // namespace

Integer HodgeTable::h(long p, long q) const {
    Integer sum = 0;
    for (const auto& e : entries)
        if (e.p == p && e.q == q) sum += e.dim;
    return sum;
}

Integer HodgeTable::total_dim() const {
    Integer sum = 0;
    for (const auto& e : entries) sum += e.dim;
    return sum;
}

bool HodgeTable::satisfies_generated_invariants() const {
    for (const auto& e : entries) {
        if (e.dim <= 0 || e.p + e.q != e.weight) return false;
        if (e.weight != (e.unipotent ? n + 1 : n)) return false;
        Integer mirror = 0;
        for (const auto& f : entries)
            if (f.p == e.q && f.q == e.p && f.unipotent == e.unipotent) mirror += f.dim;
        Integer self = 0;
        for (const auto& f : entries)
            if (f.p == e.p && f.q == e.q && f.unipotent == e.unipotent) self += f.dim;
        if (mirror != self) return false;
    }
    return true;
}

HodgeTable make_hodge_table(long n, std::vector<HodgeEntry> entries) {
    using Key = std::tuple<long, long, long, bool>;
    std::map<Key, Integer> merged;
    for (const auto& e : entries) {
        if (e.p + e.q != e.weight)
            throw SchemaError("Hodge entry (" + std::to_string(e.p) + "," + std::to_string(e.q) + ") has weight " +
                              std::to_string(e.weight) + " != p + q");
        if (e.dim <= 0) throw SchemaError("Hodge entry dimensions must be positive");
        merged[{e.weight, e.p, e.q, e.unipotent}] += e.dim;
    }
    HodgeTable table;
    table.n = n;
    for (const auto& [key, dim] : merged) {
        const auto& [w, p, q, u] = key;
        table.entries.push_back({p, q, w, u, dim});
    }
    return table;
}

std::string to_string(ChiMeaning meaning) {
    switch (meaning) {
        case ChiMeaning::reduced_middle: return "reduced_middle";
        case ChiMeaning::reduced_total: return "reduced_total";
        case ChiMeaning::total: return "total";
        case ChiMeaning::ih_cone: return "ih_cone";
    }
    return "unknown";
}

ChiClass chi_y_of_spectrum(const Spectrum& a) {
    LaurentPolyY value;
    for (const auto& [e, c] : a.sp.terms()) value += Rational(c) * minus_y_power(floor_long(e));
    return {value, ChiMeaning::reduced_middle};
}

ChiClass reduced_total_chi(const Spectrum& a) {
    if (a.num_vars < 1) throw PreconditionError("reduced_total_chi needs num_vars >= 1");
    const long n = a.num_vars - 1;
    LaurentPolyY v = chi_y_of_spectrum(a).value;
    if (n % 2 != 0) v = -v;
    return {v, ChiMeaning::reduced_total};
}

ChiClass total_chi(const Spectrum& a) {
    return {reduced_total_chi(a).value + LaurentPolyY(1), ChiMeaning::total};
}

HodgeTable hodge_table(const Spectrum& a) {
    const long n = a.num_vars - 1;
    std::vector<HodgeEntry> entries;
    for (const auto& [e, c] : a.sp.terms()) {
        if (c <= 0) throw PreconditionError("Hodge table needs positive spectrum multiplicities");
        if (e.sign() <= 0 || e >= Rational(a.num_vars))
            throw PreconditionError("spectrum exponent " + e.to_string() + " outside (0, m)");
        const long p = floor_long(e);
        if (e.is_integer()) {
            entries.push_back({p, n + 1 - p, n + 1, true, c});
        } else {
            entries.push_back({p, n - p, n, false, c});
        }
    }
    return make_hodge_table(n, std::move(entries));
}

Rational signature_steenbrink(const HodgeTable& h) {
    if (h.n % 2 != 0) return Rational(0);
    // Entry (p, q) of weight n + 2i is h^{p'+i, q'+i} for p' = p - i, so its
    // sign (-1)^{p'} (-1)^i collapses to (-1)^p; the i >= 1 terms count twice.
    Integer sigma = 0;
    for (const auto& e : h.entries) {
        const long excess = e.weight - h.n;
        if (excess < 0 || excess % 2 != 0) continue;
        const Integer contribution = excess == 0 ? e.dim : Integer(2 * e.dim);
        sigma += (e.p % 2 == 0) ? contribution : Integer(-contribution);
    }
    return Rational(sigma);
}

Rational chi_one(const Spectrum& a) { return chi_y_of_spectrum(a).value.eval(Rational(1)); }

bool rhm_signature_check(const Spectrum& a) { return chi_one(a) == signature_steenbrink(hodge_table(a)); }

bool du_bois_test(const Spectrum& a) {
    for (const auto& [e, c] : a.sp.terms())
        if (e.sign() > 0 && e < Rational(1)) return false;
    return true;
}

}  // namespace milnor_hodge
