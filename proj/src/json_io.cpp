#include "milnor_hodge/json_io.hpp"

#include <limits>

#include "milnor_hodge/error.hpp"

namespace milnor_hodge::json_io {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw SchemaError(std::string("expected an object with field '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'");
    return *it;
}

long long_from_json(const json& j, const char* what) {
    if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
    return j.get<long>();
}

bool bool_from_json(const json& j, const char* what) {
    if (!j.is_boolean()) throw SchemaError(std::string(what) + " must be a boolean");
    return j.get<bool>();
}

std::string string_from_json(const json& j, const char* what) {
    if (!j.is_string()) throw SchemaError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

}  // namespace

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

json to_json(const Integer& z) {
    if (mpz_fits_slong_p(z.get_mpz_t())) return json(static_cast<std::int64_t>(z.get_si()));
    return json(z.get_str());
}

json to_json(const Rational& r) { return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

json to_json(const LaurentPolyY& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coeff", to_json(c)}});
    return json{{"terms", terms}};
}

json to_json(const FracPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", to_json(e)}, {"coeff", to_json(c)}});
    return json{{"terms", terms}};
}

json to_json(const Spectrum& s) { return json{{"num_vars", s.num_vars}, {"spectrum", to_json(s.sp)}}; }

json to_json(const IsolatedSingularity& s) {
    if (const auto* bp = std::get_if<BrieskornPham>(&s.descriptor)) return json{{"brieskorn_pham", bp->exponents}};
    if (const auto* qh = std::get_if<QuasiHomogeneous>(&s.descriptor)) {
        json weights = json::array();
        for (const auto& w : qh->weights) weights.push_back(to_json(w));
        return json{{"quasi_homogeneous", weights}};
    }
    const auto& ex = std::get<ExplicitSpectrum>(s.descriptor);
    return json{{"explicit_spectrum", to_json(ex.sp)}, {"num_vars", ex.num_vars}};
}

json to_json(const HodgeTable& h) {
    json entries = json::array();
    for (const auto& e : h.entries) {
        entries.push_back({{"p", e.p},
                           {"q", e.q},
                           {"weight", e.weight},
                           {"unipotent", e.unipotent},
                           {"dim", to_json(e.dim)}});
    }
    return json{{"n", h.n}, {"entries", entries}};
}

json to_json(const ChiClass& c) { return json{{"meaning", to_string(c.meaning)}, {"value", to_json(c.value)}}; }

json to_json(const StratifiedClass& c) {
    json out = json::object();
    for (const auto& [name, p] : c.terms()) out[name] = to_json(p);
    return out;
}

json to_json(const Stratification& s) {
    json strata = json::array();
    for (const Stratum& v : s.strata()) {
        json j{{"name", v.name}, {"dim", v.dim}, {"singular", v.singular}};
        if (v.t_closure) j["T_closure"] = to_json(*v.t_closure);
        if (v.t_boundary) j["T_boundary"] = to_json(*v.t_boundary);
        if (v.it_closure) j["IT_closure"] = to_json(*v.it_closure);
        if (v.milnor_spectrum)
            j["milnor"] = json{{"explicit_spectrum", to_json(v.milnor_spectrum->sp)},
                               {"num_vars", v.milnor_spectrum->num_vars}};
        if (v.milnor_chi) j["milnor_chi"] = to_json(*v.milnor_chi);
        if (!v.ih_cone_link_chi.empty()) {
            json links = json::object();
            for (const auto& [w, p] : v.ih_cone_link_chi) links[w] = to_json(p);
            j["ih_cone_link_chi"] = links;
        }
        if (v.ih_cone_link_in_x) j["ih_cone_link_in_X"] = to_json(*v.ih_cone_link_in_x);
        strata.push_back(std::move(j));
    }
    json order = json::array();
    for (const auto& [lo, hi] : s.order_pairs()) order.push_back(json::array({lo, hi}));
    json out{{"strata", strata}, {"order", order}, {"monodromy_trivial", true}};
    if (s.ambient_dim()) out["n"] = *s.ambient_dim();
    return out;
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()), 10);
    if (j.is_string()) {
        try {
            return parse_integer(j.get<std::string>());
        } catch (const ParseError& e) {
            throw SchemaError(e.what());
        }
    }
    throw SchemaError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const json& j) {
    if (j.is_object()) {
        const Integer den = integer_from_json(field(j, "den"));
        if (den <= 0) throw SchemaError("rational denominator must be positive, got " + j.dump());
        return Rational(integer_from_json(field(j, "num")), den);
    }
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const ParseError& e) {
            throw SchemaError(e.what());
        }
    }
    return Rational(integer_from_json(j));
}

LaurentPolyY laurent_from_json(const json& j) {
    if (j.is_string()) return LaurentPolyY::parse(j.get<std::string>());
    if (j.is_number_integer()) return LaurentPolyY(Rational(integer_from_json(j)));
    const json& terms = field(j, "terms");
    if (!terms.is_array()) throw SchemaError("'terms' must be an array");
    LaurentPolyY p;
    for (const json& t : terms)
        p += LaurentPolyY::monomial(rational_from_json(field(t, "coeff")), long_from_json(field(t, "exp"), "exp"));
    return p;
}

FracPoly frac_poly_from_json(const json& j) {
    if (j.is_string()) return FracPoly::parse(j.get<std::string>());
    const json& terms = field(j, "terms");
    if (!terms.is_array()) throw SchemaError("'terms' must be an array");
    FracPoly p;
    for (const json& t : terms)
        p += FracPoly::monomial(integer_from_json(field(t, "coeff")), rational_from_json(field(t, "exp")));
    return p;
}

Spectrum spectrum_from_json(const json& j) {
    if (j.is_object() && j.contains("spectrum")) {
        const long m = long_from_json(field(j, "num_vars"), "num_vars");
        return explicit_spectrum(frac_poly_from_json(j["spectrum"]), static_cast<int>(m));
    }
    return singularity_from_json(j).spectrum();
}

IsolatedSingularity singularity_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("singularity must be a JSON object");
    if (j.contains("brieskorn_pham")) {
        const json& a = j["brieskorn_pham"];
        if (!a.is_array()) throw SchemaError("'brieskorn_pham' must be an array of integers");
        BrieskornPham bp;
        for (const json& w : a) bp.exponents.push_back(long_from_json(w, "Brieskorn-Pham exponent"));
        return {bp};
    }
    if (j.contains("quasi_homogeneous")) {
        const json& a = j["quasi_homogeneous"];
        if (!a.is_array()) throw SchemaError("'quasi_homogeneous' must be an array of rationals");
        QuasiHomogeneous qh;
        for (const json& w : a) qh.weights.push_back(rational_from_json(w));
        return {qh};
    }
    if (j.contains("explicit_spectrum")) {
        ExplicitSpectrum ex;
        ex.sp = frac_poly_from_json(j["explicit_spectrum"]);
        ex.num_vars = static_cast<int>(long_from_json(field(j, "num_vars"), "num_vars"));
        return {ex};
    }
    throw SchemaError("singularity needs one of 'brieskorn_pham', 'quasi_homogeneous', 'explicit_spectrum'");
}

HodgeTable hodge_table_from_json(const json& j) {
    const long n = long_from_json(field(j, "n"), "n");
    const json& entries = field(j, "entries");
    if (!entries.is_array()) throw SchemaError("'entries' must be an array");
    std::vector<HodgeEntry> out;
    for (const json& e : entries) {
        HodgeEntry h;
        h.p = long_from_json(field(e, "p"), "p");
        h.q = long_from_json(field(e, "q"), "q");
        h.weight = e.contains("weight") ? long_from_json(e["weight"], "weight") : h.p + h.q;
        h.unipotent = e.contains("unipotent") ? bool_from_json(e["unipotent"], "unipotent") : false;
        h.dim = integer_from_json(field(e, "dim"));
        out.push_back(std::move(h));
    }
    return make_hodge_table(n, std::move(out));
}

StratifiedClass stratified_class_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("class must be an object mapping symbols to polynomials");
    StratifiedClass c;
    for (const auto& [name, p] : j.items()) c += StratifiedClass::symbol(name, laurent_from_json(p));
    return c;
}

Stratification stratification_from_json(const json& j) {
    const json& strata_json = field(j, "strata");
    if (!strata_json.is_array()) throw SchemaError("'strata' must be an array");
    std::vector<Stratum> strata;
    for (const json& s : strata_json) {
        Stratum v;
        v.name = string_from_json(field(s, "name"), "stratum name");
        v.dim = static_cast<int>(long_from_json(field(s, "dim"), "dim"));
        v.singular = s.contains("singular") ? bool_from_json(s["singular"], "singular") : false;
        if (s.contains("T_closure")) v.t_closure = stratified_class_from_json(s["T_closure"]);
        if (s.contains("T_boundary")) v.t_boundary = stratified_class_from_json(s["T_boundary"]);
        if (s.contains("IT_closure")) v.it_closure = stratified_class_from_json(s["IT_closure"]);
        if (s.contains("milnor")) v.milnor_spectrum = spectrum_from_json(s["milnor"]);
        if (s.contains("milnor_chi")) v.milnor_chi = laurent_from_json(s["milnor_chi"]);
        if (s.contains("ih_cone_link_chi")) {
            const json& links = s["ih_cone_link_chi"];
            if (!links.is_object()) throw SchemaError("'ih_cone_link_chi' must map stratum names to polynomials");
            for (const auto& [w, p] : links.items()) v.ih_cone_link_chi.emplace(w, laurent_from_json(p));
        }
        if (s.contains("ih_cone_link_in_X")) v.ih_cone_link_in_x = laurent_from_json(s["ih_cone_link_in_X"]);
        strata.push_back(std::move(v));
    }
    std::vector<std::pair<std::string, std::string>> order;
    if (j.contains("order")) {
        const json& o = j["order"];
        if (!o.is_array()) throw SchemaError("'order' must be an array of [lower, upper] pairs");
        for (const json& pair : o) {
            if (!pair.is_array() || pair.size() != 2) throw SchemaError("order entries must be [lower, upper]");
            order.emplace_back(string_from_json(pair[0], "order entry"), string_from_json(pair[1], "order entry"));
        }
    }
    std::optional<int> n;
    if (j.contains("n")) n = static_cast<int>(long_from_json(j["n"], "n"));
    const bool trivial = j.contains("monodromy_trivial") ? bool_from_json(j["monodromy_trivial"], "monodromy_trivial")
                                                         : true;
    return Stratification(std::move(strata), std::move(order), n, trivial);
}

}  // namespace milnor_hodge::json_io
