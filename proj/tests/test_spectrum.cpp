#include <doctest.h>

#include <random>

#include "milnor_hodge/error.hpp"
#include "milnor_hodge/spectrum.hpp"
#include "oracles.hpp"

using namespace milnor_hodge;

namespace {

FracPoly from_counts(const std::map<Rational, long>& counts) {
    FracPoly p;
    for (const auto& [e, c] : counts) p += FracPoly::monomial(c, e);
    return p;
}

std::vector<long> random_exponents(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> len(1, 5), w(2, 8);
    std::vector<long> out(static_cast<std::size_t>(len(rng)));
    for (auto& x : out) x = w(rng);
    return out;
}

}  // namespace

TEST_CASE("Brieskorn-Pham spectra") {
    CHECK(brieskorn_pham(std::vector<long>{3, 2}).sp.to_string() == "t^(5/6) + t^(7/6)");
    CHECK(brieskorn_pham(std::vector<long>{2, 2}).sp == FracPoly::monomial(1, Rational(1)));
    CHECK(brieskorn_pham(std::vector<long>{3, 2}).num_vars == 2);
    CHECK_THROWS_AS(brieskorn_pham(std::vector<long>{}), PreconditionError);
    CHECK_THROWS_AS(brieskorn_pham(std::vector<long>{3, 1}), PreconditionError);
}

TEST_CASE("Brieskorn-Pham agrees with tuple enumeration") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const auto w = random_exponents(rng);
        const Spectrum s = brieskorn_pham(w);
        CHECK(s.sp == from_counts(oracle::bp_exponents(w)));
        Integer mu = 1;
        for (long x : w) mu *= x - 1;
        CHECK(milnor_number(s) == mu);
    }
}

TEST_CASE("quasi-homogeneous closed form") {
    // Weights 1/w reproduce Brieskorn-Pham.
    std::mt19937_64 rng(5);
    for (int i = 0; i < 60; ++i) {
        const auto w = random_exponents(rng);
        std::vector<Rational> weights;
        for (long x : w) weights.emplace_back(Integer(1), Integer(x));
        CHECK(quasi_homogeneous(weights) == brieskorn_pham(w));
    }
    // D4 = x^2 y + y^3 (+ z^2): weights (1/3, 1/3, 1/2), mu = 4.
    const std::vector<Rational> d4 = {Rational(1, 3), Rational(1, 3), Rational(1, 2)};
    const Spectrum s = quasi_homogeneous(d4);
    CHECK(milnor_number(s) == 4);
    CHECK(s.sp == FracPoly::parse("t^(7/6) + 2*t^(3/2) + t^(11/6)"));
    // E7 = x^3 + x y^3: weights (1/3, 2/9), mu = 7.
    const std::vector<Rational> e7 = {Rational(1, 3), Rational(2, 9)};
    CHECK(milnor_number(quasi_homogeneous(e7)) == 7);
    // Not an isolated quasi-homogeneous type.
    const std::vector<Rational> bad = {Rational(2, 5), Rational(1, 3)};
    CHECK_THROWS_AS(quasi_homogeneous(bad), PreconditionError);
    const std::vector<Rational> out_of_range = {Rational(2, 3)};
    CHECK_THROWS_AS(quasi_homogeneous(out_of_range), PreconditionError);
}

TEST_CASE("Thom-Sebastiani and suspension") {
    const Spectrum a = brieskorn_pham(std::vector<long>{3});
    const Spectrum b = brieskorn_pham(std::vector<long>{4, 5});
    CHECK(thom_sebastiani(a, b) == brieskorn_pham(std::vector<long>{3, 4, 5}));
    CHECK(thom_sebastiani(Spectrum::unit(), a) == a);
    CHECK(suspension(a) == brieskorn_pham(std::vector<long>{3, 2}));
    CHECK(suspension(suspension(b)) == brieskorn_pham(std::vector<long>{4, 5, 2, 2}));
}

TEST_CASE("explicit spectra are validated") {
    CHECK(explicit_spectrum(FracPoly::parse("t^(1/2)"), 1).num_vars == 1);
    CHECK_THROWS_AS(explicit_spectrum(FracPoly::parse("t^2"), 2), PreconditionError);
    CHECK_THROWS_AS(explicit_spectrum(FracPoly::parse("-t^(1/2)"), 1), PreconditionError);
    CHECK_THROWS_AS(explicit_spectrum(FracPoly::parse("t^(1/2)"), 0), PreconditionError);
    const IsolatedSingularity s{ExplicitSpectrum{FracPoly::parse("t^1"), 2}};
    CHECK(s.num_vars() == 2);
    CHECK(s.dimension() == 1);
    CHECK(s.spectrum() == brieskorn_pham(std::vector<long>{2, 2}));
}
