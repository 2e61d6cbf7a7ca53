#pragma once

// Independent reference computations shared by the unit and acceptance
// tests. They use only Rational / LaurentPolyY arithmetic and brute-force
// enumeration, never the engines under test.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "milnor_hodge/laurent.hpp"
#include "milnor_hodge/rational.hpp"
#include "milnor_hodge/strata.hpp"

namespace oracle {

using milnor_hodge::Integer;
using milnor_hodge::LaurentPolyY;
using milnor_hodge::Rational;
using milnor_hodge::StratifiedClass;

/// Calls f(j) for every j with 1 <= j_k <= w_k - 1.
inline void for_each_tuple(const std::vector<long>& w, const std::function<void(const std::vector<long>&)>& f) {
    std::vector<long> j(w.size(), 1);
    while (true) {
        f(j);
        std::size_t k = 0;
        while (k < j.size() && ++j[k] == w[k]) j[k++] = 1;
        if (k == j.size()) return;
    }
}

/// Exponents sum_k j_k / w_k with multiplicity.
inline std::map<Rational, long> bp_exponents(const std::vector<long>& w) {
    std::map<Rational, long> out;
    for_each_tuple(w, [&](const std::vector<long>& j) {
        Rational s(0);
        for (std::size_t k = 0; k < j.size(); ++k) s += Rational(j[k], w[k]);
        ++out[s];
    });
    return out;
}

inline LaurentPolyY signed_y_power(long k) { return LaurentPolyY::monomial(k % 2 == 0 ? 1 : -1, k); }

/// sum over exponents b of (-y)^floor(b).
inline LaurentPolyY chi_middle(const std::vector<long>& w) {
    LaurentPolyY out;
    for (const auto& [b, c] : bp_exponents(w)) out += signed_y_power(b.floor().get_si()) * Rational(c);
    return out;
}

/// Brieskorn's count for sum x_k^{w_k}: +1 for each tuple with sum j_k/w_k in
/// (0, 1) mod 2, -1 for (1, 2) mod 2.
inline long brieskorn_signature(const std::vector<long>& w) {
    long sigma = 0;
    for_each_tuple(w, [&](const std::vector<long>& j) {
        Rational s(0);
        for (std::size_t k = 0; k < j.size(); ++k) s += Rational(j[k], w[k]);
        if (s.is_integer()) return;
        const long f = s.floor().get_si();
        sigma += (f % 2 == 0) ? 1 : -1;
    });
    return sigma;
}

/// chi_y of a smooth degree-d hypersurface of dimension n from its Hodge
/// numbers: the hyperplane classes h^{i,i} plus the primitive middle part,
/// h^{n-p,p}_prim = #{tuples for d in n+2 variables with sum j/d = p + 1}.
inline LaurentPolyY griffiths_chi_y(long d, long n) {
    LaurentPolyY out;
    for (long i = 0; i <= n; ++i) out += signed_y_power(i);
    if (d == 1) return out;
    const auto ex = bp_exponents(std::vector<long>(static_cast<std::size_t>(n + 2), d));
    for (long p = 0; p <= n; ++p) {
        auto it = ex.find(Rational(p + 1));
        if (it == ex.end()) continue;
        // h^{n-p,p} contributes (-1)^p y^{n-p}.
        out += LaurentPolyY::monomial(Rational(p % 2 == 0 ? it->second : -it->second), n - p);
    }
    return out;
}

/// Euler characteristic from c(TX) = (1+h)^{n+2}/(1+dh), deg h^n = d.
inline Rational smooth_euler(long d, long n) {
    Rational sum(0);
    Rational binom(1);
    for (long i = 0; i <= n; ++i) {
        sum += binom * Rational(-d).pow(n - i);
        binom = binom * Rational(n + 2 - i) / Rational(i + 1);
    }
    return sum * Rational(d);
}

/// Inverse of the unitriangular link matrix by explicit chain enumeration:
///   L^{-1}(W, V) = sum over chains W = c_0 < ... < c_k = V of (-1)^k prod L(c_i, c_{i+1}),
/// and IT-hat(V) = sum_{W <= V} IT(W) L^{-1}(W, V).
struct PosetData {
    std::vector<std::string> names;
    std::function<bool(const std::string&, const std::string&)> less;
    std::function<LaurentPolyY(const std::string&, const std::string&)> link;
    std::map<std::string, StratifiedClass> it_closure;
};

inline LaurentPolyY inverse_link(const PosetData& p, const std::string& w, const std::string& v) {
    if (w == v) return LaurentPolyY(1);
    LaurentPolyY total;
    std::function<void(const std::string&, const LaurentPolyY&, long)> walk = [&](const std::string& at,
                                                                                  const LaurentPolyY& weight, long k) {
        for (const auto& next : p.names) {
            if (!p.less(at, next)) continue;
            if (next != v && !p.less(next, v)) continue;
            const LaurentPolyY extended = weight * p.link(at, next);
            if (next == v)
                total += (k % 2 == 0 ? Rational(-1) : Rational(1)) * extended;
            else
                walk(next, extended, k + 1);
        }
    };
    walk(w, LaurentPolyY(1), 0);
    return total;
}

inline std::map<std::string, StratifiedClass> mobius_it_hat(const PosetData& p) {
    std::map<std::string, StratifiedClass> out;
    for (const auto& v : p.names) {
        StratifiedClass acc;
        for (const auto& w : p.names)
            if (w == v || p.less(w, v)) acc += p.it_closure.at(w) * inverse_link(p, w, v);
        out[v] = acc;
    }
    return out;
}

}  // namespace oracle
