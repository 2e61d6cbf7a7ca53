#include "milnor_hodge/strata.hpp"

#include <algorithm>
#include <set>

#include "milnor_hodge/error.hpp"

namespace milnor_hodge {

// ---------------------------------------------------------------------------
// StratifiedClass

StratifiedClass StratifiedClass::symbol(const std::string& name, const LaurentPolyY& coeff) {
    StratifiedClass c;
    c.add(name, coeff);
    return c;
}

void StratifiedClass::add(const std::string& name, const LaurentPolyY& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(name, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPolyY StratifiedClass::coeff(const std::string& name) const {
    auto it = terms_.find(name);
    return it == terms_.end() ? LaurentPolyY() : it->second;
}

std::map<std::string, Rational> StratifiedClass::eval(const Rational& y0) const {
    std::map<std::string, Rational> out;
    for (const auto& [name, c] : terms_) out.emplace(name, c.eval(y0));
    return out;
}

std::string StratifiedClass::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [name, c] : terms_) {
        std::string term;
        if (c == LaurentPolyY(1)) {
            term = "[" + name + "]";
        } else if (c == LaurentPolyY(-1)) {
            term = "-[" + name + "]";
        } else if (c.is_monomial()) {
            term = c.to_string() + "*[" + name + "]";
        } else {
            term = "(" + c.to_string() + ")*[" + name + "]";
        }
        if (out.empty()) {
            out = term;
        } else if (term.front() == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

StratifiedClass& StratifiedClass::operator+=(const StratifiedClass& o) {
    for (const auto& [name, c] : o.terms_) add(name, c);
    return *this;
}

StratifiedClass& StratifiedClass::operator-=(const StratifiedClass& o) {
    for (const auto& [name, c] : o.terms_) add(name, -c);
    return *this;
}

StratifiedClass& StratifiedClass::operator*=(const LaurentPolyY& c) {
    Terms scaled;
    for (const auto& [name, v] : terms_) {
        LaurentPolyY p = v * c;
        if (!p.is_zero()) scaled.emplace(name, std::move(p));
    }
    terms_ = std::move(scaled);
    return *this;
}

// ---------------------------------------------------------------------------
// Stratification

Stratification::Stratification(std::vector<Stratum> strata, std::vector<std::pair<std::string, std::string>> order,
                               std::optional<int> ambient_dim, bool monodromy_trivial)
    : strata_(std::move(strata)), pairs_(std::move(order)), ambient_dim_(ambient_dim) {
    if (!monodromy_trivial)
        throw PreconditionError("stratification declared with nontrivial monodromy along strata; "
                                "the class formulas assume simply-connected strata");
    for (std::size_t i = 0; i < strata_.size(); ++i) {
        if (strata_[i].name.empty()) throw SchemaError("stratum with empty name");
        if (!by_name_.emplace(strata_[i].name, i).second)
            throw SchemaError("duplicate stratum name '" + strata_[i].name + "'");
    }
    const std::size_t n = strata_.size();
    less_.assign(n, std::vector<bool>(n, false));
    for (const auto& [lo, hi] : pairs_) {
        const std::size_t w = index(lo);
        const std::size_t v = index(hi);
        if (w == v) throw SchemaError("order relates stratum '" + lo + "' to itself");
        less_[w][v] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (less_[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (less_[k][j]) less_[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        if (less_[i][i]) throw SchemaError("cycle in stratum order through '" + strata_[i].name + "'");

    for (std::size_t w = 0; w < n; ++w) {
        for (std::size_t v = 0; v < n; ++v) {
            if (!less_[w][v]) continue;
            const Stratum& lo = strata_[w];
            const Stratum& hi = strata_[v];
            if (lo.dim >= hi.dim)
                throw SchemaError("stratum '" + lo.name + "' lies in the closure of '" + hi.name +
                                  "' but does not have smaller dimension");
            if (hi.singular && !lo.singular)
                throw SchemaError("stratum '" + lo.name + "' below singular stratum '" + hi.name +
                                  "' must be singular");
        }
    }

    for (const Stratum& s : strata_) {
        if (!s.singular) continue;
        if (!s.milnor_spectrum && !s.milnor_chi)
            throw SchemaError("singular stratum '" + s.name + "' has no Milnor fiber data");
        if (ambient_dim_) {
            if (s.dim >= *ambient_dim_)
                throw SchemaError("singular stratum '" + s.name + "' has dim >= ambient dimension");
            if (s.milnor_spectrum && s.milnor_spectrum->num_vars != *ambient_dim_ - s.dim + 1)
                throw SchemaError("transversal spectrum of '" + s.name + "' has num_vars " +
                                  std::to_string(s.milnor_spectrum->num_vars) + ", expected n - dim + 1 = " +
                                  std::to_string(*ambient_dim_ - s.dim + 1));
        }
        if (s.milnor_spectrum && s.milnor_chi && reduced_total_chi(*s.milnor_spectrum).value != *s.milnor_chi)
            throw SchemaError("stratum '" + s.name + "': milnor_chi disagrees with the transversal spectrum");
    }
}

std::size_t Stratification::index(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw SchemaError("unknown stratum '" + name + "'");
    return it->second;
}

const Stratum& Stratification::stratum(const std::string& name) const { return strata_[index(name)]; }

bool Stratification::less(const std::string& lower, const std::string& upper) const {
    return less_[index(lower)][index(upper)];
}

std::vector<std::string> Stratification::below(const std::string& name) const {
    const std::size_t v = index(name);
    std::vector<std::string> out;
    for (std::size_t w = 0; w < strata_.size(); ++w)
        if (less_[w][v]) out.push_back(strata_[w].name);
    return out;
}

std::vector<std::string> Stratification::singular_linear_extension() const {
    std::vector<std::string> out;
    std::vector<bool> placed(strata_.size(), false);
    std::size_t remaining = 0;
    for (const Stratum& s : strata_) remaining += s.singular ? 1 : 0;
    while (out.size() < remaining) {
        for (std::size_t v = 0; v < strata_.size(); ++v) {
            if (placed[v] || !strata_[v].singular) continue;
            bool ready = true;
            for (std::size_t w = 0; w < strata_.size() && ready; ++w)
                if (less_[w][v] && !placed[w]) ready = false;
            if (ready) {
                placed[v] = true;
                out.push_back(strata_[v].name);
                break;
            }
        }
    }
    return out;
}

bool Stratification::is_linear_extension(const std::vector<std::string>& sequence) const {
    std::set<std::string> seen;
    for (const std::string& name : sequence) {
        auto it = by_name_.find(name);
        if (it == by_name_.end() || !strata_[it->second].singular || seen.count(name)) return false;
        for (const std::string& w : below(name))
            if (!seen.count(w)) return false;
        seen.insert(name);
    }
    std::size_t singular = 0;
    for (const Stratum& s : strata_) singular += s.singular ? 1 : 0;
    return seen.size() == singular;
}

LaurentPolyY Stratification::milnor_reduced_chi(const std::string& name) const {
    const Stratum& s = stratum(name);
    if (s.milnor_chi) return *s.milnor_chi;
    if (s.milnor_spectrum) return reduced_total_chi(*s.milnor_spectrum).value;
    throw SchemaError("stratum '" + name + "' has no Milnor fiber data");
}

// ---------------------------------------------------------------------------
// Class formulas

namespace {

const StratifiedClass& require(const std::optional<StratifiedClass>& c, const Stratum& s, const char* field) {
    if (!c) throw SchemaError("stratum '" + s.name + "' is missing " + field);
    return *c;
}

// T_y(closure V) - T_y(closure V minus V); the boundary class may be omitted
// only when nothing lies below V.
StratifiedClass open_stratum_class(const Stratification& s, const Stratum& v) {
    const StratifiedClass& closure = require(v.t_closure, v, "T_closure");
    if (v.t_boundary) return closure - *v.t_boundary;
    if (!s.below(v.name).empty()) throw SchemaError("stratum '" + v.name + "' is missing T_boundary");
    return closure;
}

LaurentPolyY link_in_x(const Stratum& v) {
    if (!v.ih_cone_link_in_x) throw SchemaError("stratum '" + v.name + "' is missing ih_cone_link_in_X");
    return *v.ih_cone_link_in_x;
}

}  // namespace

StratifiedClass mt_isolated(const std::vector<std::pair<std::string, Spectrum>>& sings) {
    StratifiedClass out;
    if (sings.empty()) return out;
    const int m = sings.front().second.num_vars;
    for (const auto& [name, sp] : sings) {
        if (sp.num_vars != m)
            throw SchemaError("isolated singularities disagree on num_vars (" + std::to_string(m) + " vs " +
                              std::to_string(sp.num_vars) + " at '" + name + "')");
        out += StratifiedClass::symbol(name, reduced_total_chi(sp).value);
    }
    return out;
}

StratifiedClass mt_smooth_locus(const Spectrum& transversal, int n, int r, const StratifiedClass& t_sigma) {
    if (r < 0 || r >= n)
        throw SchemaError("singular locus dimension r = " + std::to_string(r) + " must satisfy 0 <= r < n = " +
                          std::to_string(n));
    if (transversal.num_vars != n - r + 1)
        throw SchemaError("transversal spectrum has num_vars " + std::to_string(transversal.num_vars) +
                          ", expected n - r + 1 = " + std::to_string(n - r + 1));
    if (t_sigma.is_zero()) throw PreconditionError("T_y class of the singular locus must be nonzero");
    LaurentPolyY weight = chi_y_of_spectrum(transversal).value;
    if ((n - r) % 2 != 0) weight = -weight;
    return t_sigma * weight;
}

StratifiedClass mt_stratified_direct(const Stratification& s) {
    StratifiedClass out;
    for (const Stratum& v : s.strata()) {
        if (!v.singular) continue;
        out += open_stratum_class(s, v) * s.milnor_reduced_chi(v.name);
    }
    return out;
}

std::map<std::string, StratifiedClass> it_hat(const Stratification& s,
                                              const std::optional<std::vector<std::string>>& order) {
    const std::vector<std::string> sequence = order ? *order : s.singular_linear_extension();
    if (order && !s.is_linear_extension(*order))
        throw SchemaError("supplied evaluation order is not a linear extension of the singular strata");
    std::map<std::string, StratifiedClass> hat;
    for (const std::string& name : sequence) {
        const Stratum& v = s.stratum(name);
        StratifiedClass value = require(v.it_closure, v, "IT_closure");
        for (const std::string& w : s.below(name)) {
            auto link = v.ih_cone_link_chi.find(w);
            if (link == v.ih_cone_link_chi.end())
                throw SchemaError("missing ih_cone_link_chi for the pair " + w + " < " + name);
            value -= hat.at(w) * link->second;
        }
        hat.emplace(name, std::move(value));
    }
    return hat;
}

StratifiedClass mt_stratified_ic(const Stratification& s) {
    const auto hat = it_hat(s);
    StratifiedClass out;
    for (const auto& [name, cls] : hat) out += cls * s.milnor_reduced_chi(name);
    return out;
}

StratifiedClass t_minus_it(const Stratification& s) {
    const auto hat = it_hat(s);
    StratifiedClass out;
    for (const auto& [name, cls] : hat) out += cls * (LaurentPolyY(1) - link_in_x(s.stratum(name)));
    return out;
}

StratifiedClass mit_isolated(const std::vector<IsolatedIcPoint>& sings) {
    StratifiedClass out;
    if (sings.empty()) return out;
    const int m = sings.front().spectrum.num_vars;
    for (const auto& pt : sings) {
        if (pt.spectrum.num_vars != m)
            throw SchemaError("isolated singularities disagree on num_vars at '" + pt.name + "'");
        out += StratifiedClass::symbol(pt.name, total_chi(pt.spectrum).value - pt.ih_cone_chi);
    }
    return out;
}

MitResult mit_stratified(const Stratification& s) {
    MitResult result;
    for (const Stratum& v : s.strata()) {
        if (!v.singular) continue;
        const LaurentPolyY weight = LaurentPolyY(1) + s.milnor_reduced_chi(v.name) - link_in_x(v);
        result.direct += open_stratum_class(s, v) * weight;
    }
    try {
        const auto hat = it_hat(s);
        StratifiedClass alt;
        for (const auto& [name, cls] : hat)
            alt += cls * (LaurentPolyY(1) + s.milnor_reduced_chi(name) - link_in_x(s.stratum(name)));
        result.it_hat_form = std::move(alt);
    } catch (const SchemaError&) {
        // No intersection-class data: only the direct form is available.
    }
    return result;
}

// ---------------------------------------------------------------------------
// Consistency

bool ConsistencyReport::all_ok() const {
    return std::all_of(lines.begin(), lines.end(), [](const Line& l) { return l.ok; });
}

ConsistencyReport consistency_report(const Stratification& s) {
    ConsistencyReport report;
    const auto add = [&](std::string check, bool ok, std::string detail = {}) {
        report.lines.push_back({std::move(check), ok, std::move(detail)});
    };

    std::optional<std::map<std::string, StratifiedClass>> hat;
    try {
        hat = it_hat(s);
    } catch (const SchemaError&) {
    }

    for (const Stratum& v : s.strata()) {
        if (!v.singular) continue;
        const auto below = s.below(v.name);

        if (v.t_closure && v.t_boundary) {
            bool have_all = true;
            StratifiedClass expected;
            for (const std::string& w : below) {
                const Stratum& ws = s.stratum(w);
                if (!ws.t_closure || (!ws.t_boundary && !s.below(w).empty())) {
                    have_all = false;
                    break;
                }
                expected += open_stratum_class(s, ws);
            }
            if (have_all) {
                const bool ok = expected == *v.t_boundary;
                add("additivity of T_boundary(" + v.name + ")", ok,
                    ok ? "" : "expected " + expected.to_string() + ", got " + v.t_boundary->to_string());
            }
        }

        if (hat && v.t_closure && v.it_closure) {
            StratifiedClass rhs;
            for (const std::string& w : below)
                rhs += hat->at(w) * (LaurentPolyY(1) - v.ih_cone_link_chi.at(w));
            const StratifiedClass lhs = *v.t_closure - *v.it_closure;
            const bool ok = lhs == rhs;
            add("closure identity T - IT for " + v.name, ok,
                ok ? "" : "T - IT = " + lhs.to_string() + ", link sum = " + rhs.to_string());
        }
    }

    std::optional<StratifiedClass> direct;
    try {
        direct = mt_stratified_direct(s);
    } catch (const SchemaError&) {
    }
    if (direct && hat) {
        const StratifiedClass ic = mt_stratified_ic(s);
        const bool ok = ic == *direct;
        add("MT_y direct form = IT-hat form", ok,
            ok ? "" : "direct " + direct->to_string() + " vs IT-hat " + ic.to_string());
    }
    try {
        const MitResult mit = mit_stratified(s);
        if (mit.it_hat_form) {
            add("MIT_y direct form = IT-hat form", mit.forms_agree(),
                mit.forms_agree() ? "" : "direct " + mit.direct.to_string() + " vs IT-hat " +
                                             mit.it_hat_form->to_string());
        }
    } catch (const SchemaError&) {
    }
    return report;
}

}  // namespace milnor_hodge
