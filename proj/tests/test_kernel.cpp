#include <doctest.h>

#include <random>

#include "milnor_hodge/error.hpp"
#include "milnor_hodge/frac_poly.hpp"
#include "milnor_hodge/laurent.hpp"
#include "milnor_hodge/rational.hpp"
#include "milnor_hodge/series.hpp"

using namespace milnor_hodge;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

LaurentPolyY random_laurent(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coeff(-5, 5), exp(-3, 4), count(0, 4);
    LaurentPolyY p;
    for (long i = count(rng); i > 0; --i) p += LaurentPolyY::monomial(q(coeff(rng), 1 + (coeff(rng) + 5) % 3), exp(rng));
    return p;
}

FracPoly random_frac(std::mt19937_64& rng, long den) {
    std::uniform_int_distribution<long> coeff(-4, 4), num(0, 3 * den), count(1, 4);
    FracPoly p;
    for (long i = count(rng); i > 0; --i) p += FracPoly::monomial(coeff(rng), q(num(rng), den));
    return p;
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(q(6, -4) == q(-3, 2));
    CHECK(q(-3, 2).floor() == -2);
    CHECK(q(-3, 2).ceil() == -1);
    CHECK(q(7, 3).floor() == 2);
    CHECK(Rational::parse(" -5/10 ") == q(-1, 2));
    CHECK(Rational::parse("12") == q(12));
    CHECK(q(2, 3).pow(-2) == q(9, 4));
    CHECK(q(-3, 7).to_string() == "-3/7");
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), Error);
    CHECK_THROWS_AS(q(0).inverse(), Error);
}

TEST_CASE("laurent polynomials") {
    const LaurentPolyY p = LaurentPolyY::parse("2 - 20*y + 2*y^2");
    CHECK(p.to_string() == "2 - 20*y + 2*y^2");
    CHECK(p.eval(-1) == q(24));
    CHECK(p.degree() == 2);
    CHECK(p.low_degree() == 0);
    CHECK(LaurentPolyY::parse("-y").to_string() == "-y");
    CHECK(LaurentPolyY().to_string() == "0");
    CHECK(LaurentPolyY::parse("1/2*y").to_string() == "1/2*y");
    CHECK(LaurentPolyY::parse("y^-1").to_string() == "y^-1");
    CHECK(LaurentPolyY::parse("1 - y").invert_variable() == LaurentPolyY::parse("1 - y^-1"));
    CHECK(LaurentPolyY::parse("1 - y").shift(2) == LaurentPolyY::parse("y^2 - y^3"));
    CHECK(LaurentPolyY::parse("1 + y").pow(3) == LaurentPolyY::parse("1 + 3*y + 3*y^2 + y^3"));
    CHECK(LaurentPolyY::parse("y - y") .is_zero());
    CHECK_THROWS_AS(LaurentPolyY::parse("y^-1").eval(0), PreconditionError);
    CHECK_THROWS_AS(LaurentPolyY::parse("y^(1/2)"), ParseError);
    CHECK_THROWS_AS(LaurentPolyY::parse("2 +"), ParseError);
}

TEST_CASE("laurent ring axioms on random data") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == LaurentPolyY());
        CHECK(LaurentPolyY::parse(a.to_string()) == a);
        const Rational y0 = q(static_cast<long>(i % 7) - 3, 2);
        if (!y0.is_zero()) CHECK((a * b).eval(y0) == a.eval(y0) * b.eval(y0));
        if (!y0.is_zero()) CHECK(a.invert_variable().eval(y0) == a.eval(y0.inverse()));
    }
}

TEST_CASE("fractional polynomials") {
    const FracPoly p = FracPoly::parse("t^(5/6) + t^(7/6)");
    CHECK(p.to_string() == "t^(5/6) + t^(7/6)");
    CHECK(p.coefficient_sum() == 2);
    CHECK(p.min_exponent() == q(5, 6));
    CHECK(p.max_exponent() == q(7, 6));
    CHECK(FracPoly::parse("2*t^1 + 3").to_string() == "3 + 2*t^1");
    CHECK(FracPoly().to_string() == "0");
    CHECK(p.shift(q(1, 6)) == FracPoly::parse("t^1 + t^(4/3)"));
    const FracPoly a = FracPoly::parse("t^(1/2) + t^(1/3)");
    const FracPoly b = FracPoly::parse("1 - t^(1/3)");
    CHECK((a * b).divide_exact(b) == a);
    CHECK_THROWS_AS(a.divide_exact(b), PreconditionError);
    CHECK_THROWS_AS(a.divide_exact(FracPoly()), PreconditionError);
}

TEST_CASE("exact division inverts multiplication on random data") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const long den = 1 + i % 6;
        const FracPoly a = random_frac(rng, den);
        FracPoly b = random_frac(rng, den);
        if (b.is_zero()) b = FracPoly::one();
        if (a.is_zero()) continue;
        CHECK((a * b).divide_exact(b) == a);
        CHECK(FracPoly::parse(a.to_string()) == a);
    }
}

TEST_CASE("Todd coefficients match Bernoulli numbers") {
    const std::vector<Rational> expected = {q(1), q(1, 2), q(1, 12), q(0), q(-1, 720), q(0), q(1, 30240)};
    CHECK(todd_series_coefficients(6) == expected);
}

TEST_CASE("Q_y specializations") {
    const TruncatedSeries qy = series_q_y(8);
    CHECK(qy.coeff(0) == LaurentPolyY(1));
    CHECK(qy.coeff(1) == LaurentPolyY::parse("1/2 - 1/2*y"));
    // y = -1: 1 + alpha.
    CHECK(qy.eval_y(-1) == std::vector<Rational>{1, 1, 0, 0, 0, 0, 0, 0, 0});
    // y = 0: Todd series.
    const auto todd = todd_series_coefficients(8);
    CHECK(qy.eval_y(0) == todd);
    // y = 1: alpha / tanh(alpha) = 1 + a^2/3 - a^4/45 + 2a^6/945 - a^8/4725.
    CHECK(qy.eval_y(1) == std::vector<Rational>{1, 0, q(1, 3), 0, q(-1, 45), 0, q(2, 945), 0, q(-1, 4725)});
}

TEST_CASE("series inverse and power") {
    const TruncatedSeries qy = series_q_y(6);
    const TruncatedSeries one = qy * qy.inverse();
    CHECK(one.coeff(0) == LaurentPolyY(1));
    for (std::size_t k = 1; k <= 6; ++k) CHECK(one.coeff(k).is_zero());
    CHECK(qy.pow(3) == qy * qy * qy);
    CHECK(qy.scale_argument(2).coeff(2) == qy.coeff(2) * q(4));
    const TruncatedSeries bad({LaurentPolyY::parse("1 + y"), LaurentPolyY(1)});
    CHECK_THROWS_AS(bad.inverse(), PreconditionError);
}
