#include <doctest.h>

#include <random>

#include "milnor_hodge/error.hpp"
#include "milnor_hodge/strata.hpp"
#include "oracles.hpp"

using namespace milnor_hodge;

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

LaurentPolyY poly(const char* text) { return LaurentPolyY::parse(text); }

Stratum point(const std::string& name, const Spectrum& sp) {
    Stratum v;
    v.name = name;
    v.singular = true;
    v.milnor_spectrum = sp;
    v.t_closure = StratifiedClass::symbol(name);
    v.t_boundary = StratifiedClass();
    v.it_closure = StratifiedClass::symbol(name);
    return v;
}

LaurentPolyY random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> c(-3, 3), e(-1, 3), n(0, 3);
    LaurentPolyY p;
    for (long i = n(rng); i > 0; --i) p += LaurentPolyY::monomial(c(rng), e(rng));
    return p;
}

}  // namespace

TEST_CASE("stratified class arithmetic and rendering") {
    const StratifiedClass a = StratifiedClass::symbol("V", poly("1 - y")) + StratifiedClass::symbol("p", poly("y"));
    CHECK(a.to_string() == "(1 - y)*[V] + y*[p]");
    CHECK((a - a).is_zero());
    CHECK((a - a).to_string() == "0");
    CHECK((StratifiedClass::symbol("p", -1) + StratifiedClass::symbol("q", 2)).to_string() == "-[p] + 2*[q]");
    CHECK((a * poly("y")).coeff("p") == poly("y^2"));
    CHECK(a.eval(-1).at("V") == Rational(2));
}

TEST_CASE("stratification validation") {
    Stratum p = point("p", brieskorn_pham(std::vector<long>{2, 2, 2}));
    Stratum q = point("q", brieskorn_pham(std::vector<long>{2, 2, 2}));
    CHECK_NOTHROW(Stratification({p, q}, {}, 2));
    CHECK_THROWS_AS(Stratification({p, p}, {}), SchemaError);
    CHECK_THROWS_AS(Stratification({p, q}, Pairs{{"p", "x"}}), SchemaError);
    CHECK_THROWS_AS(Stratification({p}, Pairs{{"p", "p"}}), SchemaError);
    // Wrong transversal size for n = 3.
    CHECK_THROWS_AS(Stratification({p}, {}, 3), SchemaError);
    CHECK_THROWS_AS(Stratification({p}, {}, 2, false), PreconditionError);

    Stratum s = point("S", brieskorn_pham(std::vector<long>{2, 2}));
    s.dim = 1;
    CHECK_THROWS_AS(Stratification({p, s}, Pairs{{"S", "p"}}, 2), SchemaError);  // dimension order
    Stratum t = s;
    t.name = "T";
    CHECK_THROWS_AS(Stratification({s, t}, Pairs{{"S", "T"}, {"T", "S"}}), SchemaError);  // cycle

    Stratum no_data;
    no_data.name = "z";
    no_data.singular = true;
    CHECK_THROWS_AS(Stratification({no_data}, {}), SchemaError);
    Stratum wrong_chi = p;
    wrong_chi.milnor_chi = poly("y");
    CHECK_THROWS_AS(Stratification({wrong_chi}, {}), SchemaError);
}

TEST_CASE("order is transitively closed") {
    std::vector<Stratum> strata;
    for (int i = 0; i < 3; ++i) {
        Stratum v;
        v.name = "S" + std::to_string(i);
        v.dim = i;
        strata.push_back(v);
    }
    const Stratification st(strata, Pairs{{"S0", "S1"}, {"S1", "S2"}});
    CHECK(st.less("S0", "S2"));
    CHECK_FALSE(st.less("S2", "S0"));
    CHECK(st.below("S2") == std::vector<std::string>{"S0", "S1"});
    CHECK(st.order_pairs().size() == 2);
}

TEST_CASE("isolated formulas") {
    const Spectrum node = brieskorn_pham(std::vector<long>{2, 2});
    const Spectrum cusp = brieskorn_pham(std::vector<long>{3, 2});
    const StratifiedClass mt = mt_isolated({{"p", node}, {"q", cusp}});
    CHECK(mt.coeff("p") == poly("y"));
    CHECK(mt.coeff("q") == poly("-1 + y"));
    CHECK_THROWS_AS(mt_isolated({{"p", node}, {"q", brieskorn_pham(std::vector<long>{2, 2, 2})}}), SchemaError);

    const StratifiedClass mit = mit_isolated({{"p", node, poly("1")}});
    CHECK(mit.coeff("p") == poly("y"));
}

TEST_CASE("smooth singular locus") {
    const Spectrum a1 = brieskorn_pham(std::vector<long>{2, 2, 2});
    const StratifiedClass mt = mt_smooth_locus(a1, 3, 1, StratifiedClass::symbol("C"));
    CHECK(mt == StratifiedClass::symbol("C", poly("-y")));
    CHECK_THROWS_AS(mt_smooth_locus(a1, 3, 2, StratifiedClass::symbol("C")), SchemaError);
    CHECK_THROWS_AS(mt_smooth_locus(a1, 3, 1, StratifiedClass()), PreconditionError);
    CHECK_THROWS_AS(mt_smooth_locus(brieskorn_pham(std::vector<long>{2, 2}), 1, 1, StratifiedClass::symbol("C")),
                    SchemaError);
}

TEST_CASE("IT-hat recursion matches the chain expansion on random posets") {
    std::mt19937_64 rng(29);
    for (int iter = 0; iter < 60; ++iter) {
        const long size = 1 + iter % 6;
        std::vector<Stratum> strata;
        Pairs pairs;
        std::uniform_int_distribution<int> coin(0, 1);
        for (long i = 0; i < size; ++i) {
            Stratum v;
            v.name = "V" + std::to_string(i);
            v.dim = static_cast<int>(i);
            v.singular = true;
            v.milnor_chi = random_poly(rng);
            v.it_closure = StratifiedClass::symbol(v.name) + StratifiedClass::symbol("extra", random_poly(rng));
            strata.push_back(v);
            for (long j = 0; j < i; ++j)
                if (coin(rng)) pairs.emplace_back("V" + std::to_string(j), v.name);
        }
        const Stratification probe(strata, pairs);
        std::map<std::pair<std::string, std::string>, LaurentPolyY> links;
        for (auto& v : strata) {
            for (const auto& w : probe.below(v.name)) {
                links[{w, v.name}] = random_poly(rng);
                v.ih_cone_link_chi[w] = links[{w, v.name}];
            }
        }
        const Stratification st(strata, pairs);

        oracle::PosetData data;
        for (const auto& v : strata) {
            data.names.push_back(v.name);
            data.it_closure[v.name] = *v.it_closure;
        }
        data.less = [&](const std::string& a, const std::string& b) { return st.less(a, b); };
        data.link = [&](const std::string& a, const std::string& b) { return links.at({a, b}); };
        CHECK(it_hat(st) == oracle::mobius_it_hat(data));
    }
}

TEST_CASE("IT-hat input errors") {
    Stratum p = point("p", brieskorn_pham(std::vector<long>{2, 2, 2}));
    Stratum s = point("S", brieskorn_pham(std::vector<long>{2, 2}));
    s.dim = 1;
    const Stratification st({p, s}, Pairs{{"p", "S"}}, 2);
    CHECK_THROWS_AS(it_hat(st), SchemaError);  // link p < S missing
    s.ih_cone_link_chi["p"] = poly("1 - y");
    const Stratification ok({p, s}, Pairs{{"p", "S"}}, 2);
    CHECK_NOTHROW(it_hat(ok));
    CHECK_THROWS_AS(it_hat(ok, std::vector<std::string>{"S", "p"}), SchemaError);
    CHECK(it_hat(ok, std::vector<std::string>{"p", "S"}) == it_hat(ok));
}

TEST_CASE("surface with a singular curve through a point") {
    Stratum p = point("p", brieskorn_pham(std::vector<long>{2, 2, 2}));
    p.ih_cone_link_in_x = poly("1");
    Stratum s;
    s.name = "S";
    s.dim = 1;
    s.singular = true;
    s.milnor_spectrum = brieskorn_pham(std::vector<long>{2, 2});
    s.t_closure = StratifiedClass::symbol("S") + StratifiedClass::symbol("p", poly("y"));
    s.t_boundary = StratifiedClass::symbol("p");
    s.it_closure = StratifiedClass::symbol("S");
    s.ih_cone_link_chi["p"] = poly("1 - y");
    s.ih_cone_link_in_x = poly("1");
    const Stratification st({p, s}, Pairs{{"p", "S"}}, 2);

    const StratifiedClass expected = StratifiedClass::symbol("S", poly("y")) +
                                     StratifiedClass::symbol("p", poly("-2*y + y^2"));
    CHECK(mt_stratified_direct(st) == expected);
    CHECK(mt_stratified_ic(st) == expected);
    CHECK(t_minus_it(st).is_zero());
    const MitResult mit = mit_stratified(st);
    CHECK(mit.forms_agree());
    CHECK(mit.direct == expected);
    CHECK(consistency_report(st).all_ok());

    // Breaking the closure data is detected.
    s.t_closure = StratifiedClass::symbol("S");
    const Stratification broken({p, s}, Pairs{{"p", "S"}}, 2);
    CHECK_FALSE(consistency_report(broken).all_ok());
}

TEST_CASE("point strata reduce to the isolated formula") {
    const Spectrum node = brieskorn_pham(std::vector<long>{2, 2});
    const Spectrum cusp = brieskorn_pham(std::vector<long>{3, 2});
    const Stratification st({point("p", node), point("q", cusp)}, {}, 1);
    CHECK(mt_stratified_direct(st) == mt_isolated({{"p", node}, {"q", cusp}}));
    CHECK(mt_stratified_ic(st) == mt_isolated({{"p", node}, {"q", cusp}}));
}
