#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kummer/fracpoly.hpp"

using kummer::BigInt;
using kummer::FracExp;
using kummer::FracPoly;

namespace {

FracPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4);
    std::uniform_int_distribution<int> expnum(0, 24);
    std::uniform_int_distribution<int> coeff(-5, 5);
    FracPoly p;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i)
        p.add_term(FracExp{expnum(rng)}, FracExp{expnum(rng)}, coeff(rng));
    return p;
}

}  // namespace

TEST_CASE("additive identity and like-term merge") {
    const FracPoly xy = FracPoly::x() + FracPoly::y();
    CHECK(xy + FracPoly::zero() == xy);

    const FracPoly sixth = FracPoly::xy_power(1, 6);
    const FracPoly doubled = sixth + sixth;
    CHECK(doubled.coefficient_at(FracExp::from_rational(1, 6), FracExp::from_rational(1, 6)) == 2);
    CHECK(doubled.term_count() == 1);

    const FracPoly xn = FracPoly::x().pow(3);
    const FracPoly yn = FracPoly::y().pow(3);
    CHECK(xn + (yn + xn) == FracPoly::monomial(FracExp::from_integer(3), {}, 2) + yn);
}

TEST_CASE("multiplication adds fractional exponents") {
    CHECK(FracPoly::xy_power(1, 6) * FracPoly::xy_power(1, 3) == FracPoly::xy_power(1, 2));

    // (1 + cbrt(XY))^3 = 1 + 3 (XY)^{1/3} + 3 (XY)^{2/3} + XY
    const FracPoly cube = (FracPoly::constant(1) + FracPoly::xy_power(1, 3)).pow(3);
    FracPoly expected = FracPoly::constant(1) + FracPoly::xy_power(1, 3, 3) +
                        FracPoly::xy_power(2, 3, 3) + FracPoly::xy_power(1, 1);
    CHECK(cube == expected);

    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        const FracPoly p = random_poly(rng);
        CHECK(p * FracPoly::constant(1) == p);
    }
}

TEST_CASE("pow") {
    const FracPoly sq = (FracPoly::x() + FracPoly::y()).pow(2);
    CHECK(sq.coefficient(2, 0) == 1);
    CHECK(sq.coefficient(1, 1) == 2);
    CHECK(sq.coefficient(0, 2) == 1);
    CHECK(sq.term_count() == 3);

    std::mt19937 rng(11);
    CHECK(random_poly(rng).pow(0) == FracPoly::constant(1));
    const FracPoly p = FracPoly::constant(1) + FracPoly::xy_power(1, 1) + FracPoly::xy_power(1, 2, 4);
    CHECK(p.pow(1) == p);
}

TEST_CASE("coefficient extraction") {
    const FracPoly p = (FracPoly::constant(1) + FracPoly::xy_power(1, 3)).pow(6);
    CHECK(p.coefficient(1, 1) == 20);  // C(6,3)

    const FracPoly q = FracPoly::x().pow(3) + FracPoly::y().pow(3);
    CHECK(q.coefficient(3, 0) == 1);
    CHECK(q.coefficient(0, 3) == 1);
    CHECK(q.coefficient(3, 3) == 0);

    CHECK((FracPoly::x() + FracPoly::y()).pow(4).coefficient(0, 0) == 0);
}

TEST_CASE("integer part and Euler evaluation") {
    // d=2, n=2 closed form
    const FracPoly f = (FracPoly::x() + FracPoly::y()).pow(2) +
                       (FracPoly::constant(1) + FracPoly::xy_power(1, 1) +
                        FracPoly::xy_power(1, 2, 4))
                           .pow(2);
    CHECK(f.integer_part().integer_part_euler() == 24);

    CHECK((FracPoly::x() + FracPoly::y()).integer_part_euler() == -2);
    CHECK(FracPoly::constant(1).integer_part_euler() == 1);
    CHECK_THROWS_AS(FracPoly::xy_power(1, 2).integer_part_euler(), std::domain_error);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(42);
    for (int i = 0; i < 200; ++i) {
        const FracPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("pow is a homomorphism from addition of exponents") {
    std::mt19937 rng(5);
    for (int i = 0; i < 10; ++i) {
        const FracPoly a = random_poly(rng);
        for (std::uint32_t m = 0; m <= 5; ++m)
            for (std::uint32_t n = 0; n <= 5 - m; ++n)
                CHECK(a.pow(m + n) == a.pow(m) * a.pow(n));
    }
}

TEST_CASE("coefficient extraction is linear") {
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        const FracPoly a = random_poly(rng), b = random_poly(rng);
        for (int p = 0; p <= 2; ++p)
            for (int q = 0; q <= 2; ++q)
                CHECK((a + b).coefficient(p, q) == a.coefficient(p, q) + b.coefficient(p, q));
    }
}

TEST_CASE("json serialization is sorted and stable") {
    FracPoly p;
    p.add_term(FracExp::from_integer(1), FracExp::from_integer(0), 3);
    p.add_term(FracExp::from_rational(1, 2), FracExp::from_rational(1, 2), -4);
    CHECK(p.to_json() ==
          "[{\"xnum\":6,\"ynum\":6,\"coeff\":\"-4\"},{\"xnum\":12,\"ynum\":0,\"coeff\":\"3\"}]");
    CHECK(FracPoly::zero().to_json() == "[]");
}

TEST_CASE("fractional exponent validation") {
    CHECK_THROWS_AS(FracExp::from_rational(1, 5), std::invalid_argument);
    CHECK(FracExp::from_rational(2, 6) == FracExp::from_rational(1, 3));
    CHECK(FracExp::from_integer(2).integer_value() == 2);
    CHECK_FALSE(FracExp::from_rational(1, 2).is_integer());
}
