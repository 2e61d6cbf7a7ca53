#include <doctest.h>

#include <random>

#include "milnor_hodge/error.hpp"
#include "milnor_hodge/json_io.hpp"

using namespace milnor_hodge;
using json_io::json;

namespace {

template <class T, class Read>
void round_trip(const T& value, Read read) {
    const json j = json_io::to_json(value);
    CHECK(read(json_io::parse(j.dump())) == value);
}

}  // namespace

TEST_CASE("scalars") {
    CHECK(json_io::to_json(Rational(-3, 4)) == json{{"num", -3}, {"den", 4}});
    const Integer big("123456789012345678901234567890");
    CHECK(json_io::to_json(big) == json("123456789012345678901234567890"));
    round_trip(big, json_io::integer_from_json);
    round_trip(Rational(big, Integer(7)), json_io::rational_from_json);
    CHECK(json_io::rational_from_json(json("5/10")) == Rational(1, 2));
    CHECK_THROWS_AS(json_io::rational_from_json(json{{"num", 1}, {"den", 0}}), SchemaError);
    CHECK_THROWS_AS(json_io::rational_from_json(json(1.5)), SchemaError);
    CHECK_THROWS_AS(json_io::parse("{"), ParseError);
}

TEST_CASE("random polynomial round trips") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<long> c(-9, 9), e(-4, 6), den(1, 7), n(0, 5);
    for (int i = 0; i < 100; ++i) {
        LaurentPolyY p;
        FracPoly f;
        StratifiedClass cls;
        for (long k = n(rng); k > 0; --k) {
            p += LaurentPolyY::monomial(Rational(c(rng), den(rng)), e(rng));
            f += FracPoly::monomial(c(rng), Rational(e(rng), den(rng)));
            cls += StratifiedClass::symbol("S" + std::to_string(k), p);
        }
        round_trip(p, json_io::laurent_from_json);
        round_trip(f, json_io::frac_poly_from_json);
        round_trip(cls, json_io::stratified_class_from_json);
        CHECK(json_io::laurent_from_json(json(p.to_string())) == p);
    }
}

TEST_CASE("spectra, singularities and Hodge tables") {
    const Spectrum e8 = brieskorn_pham(std::vector<long>{3, 5, 2});
    round_trip(e8, json_io::spectrum_from_json);
    CHECK(json_io::spectrum_from_json(json{{"brieskorn_pham", {3, 5, 2}}}) == e8);
    CHECK(json_io::spectrum_from_json(json{{"quasi_homogeneous", {"1/3", "1/5", "1/2"}}}) == e8);
    CHECK(json_io::spectrum_from_json(json{{"explicit_spectrum", "t^1"}, {"num_vars", 2}}) ==
          brieskorn_pham(std::vector<long>{2, 2}));
    const IsolatedSingularity qh{QuasiHomogeneous{{Rational(1, 3), Rational(1, 2)}}};
    CHECK(json_io::singularity_from_json(json_io::to_json(qh)).spectrum() == qh.spectrum());
    CHECK_THROWS_AS(json_io::singularity_from_json(json{{"weights", {1}}}), SchemaError);
    CHECK_THROWS_AS(json_io::spectrum_from_json(json{{"brieskorn_pham", "3,2"}}), SchemaError);
    CHECK_THROWS_AS(json_io::spectrum_from_json(json{{"spectrum", "t^3"}, {"num_vars", 2}}), PreconditionError);

    const HodgeTable t = hodge_table(brieskorn_pham(std::vector<long>{7, 3, 2}));
    round_trip(t, json_io::hodge_table_from_json);
}

TEST_CASE("stratifications") {
    const json j = json_io::parse(R"({
      "n": 2,
      "strata": [
        {"name": "p", "dim": 0, "singular": true, "milnor": {"brieskorn_pham": [2, 2, 2]},
         "T_closure": {"p": "1"}, "T_boundary": {}, "IT_closure": {"p": "1"}},
        {"name": "S", "dim": 1, "singular": true, "milnor": {"brieskorn_pham": [2, 2]},
         "T_closure": {"S": "1", "p": "y"}, "T_boundary": {"p": "1"}, "IT_closure": {"S": "1"},
         "ih_cone_link_chi": {"p": "1 - y"}, "ih_cone_link_in_X": "1"}
      ],
      "order": [["p", "S"]]
    })");
    const Stratification st = json_io::stratification_from_json(j);
    CHECK(st.strata().size() == 2);
    CHECK(st.less("p", "S"));
    const Stratification again = json_io::stratification_from_json(json_io::to_json(st));
    CHECK(mt_stratified_direct(again) == mt_stratified_direct(st));
    CHECK(json_io::to_json(again) == json_io::to_json(st));

    json bad = j;
    bad["order"] = json::array({json::array({"p"})});
    CHECK_THROWS_AS(json_io::stratification_from_json(bad), SchemaError);
    bad = j;
    bad["strata"][0]["dim"] = "zero";
    CHECK_THROWS_AS(json_io::stratification_from_json(bad), SchemaError);
    bad = j;
    bad["monodromy_trivial"] = false;
    CHECK_THROWS_AS(json_io::stratification_from_json(bad), PreconditionError);
}
