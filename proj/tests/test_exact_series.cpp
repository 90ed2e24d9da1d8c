#include <doctest.h>

#include <random>

#include <hirzebruch/errors.hpp>
#include <hirzebruch/monomial.hpp>
#include <hirzebruch/rational.hpp>
#include <hirzebruch/unipoly.hpp>
#include <hirzebruch/wseries.hpp>

#include "support.hpp"

using namespace hirzebruch;

namespace
{

WSeries L(int w, int q)
{
    return WSeries::variable(Var::L(), w, q);
}
WSeries H(int w, int q)
{
    return WSeries::variable(Var::H(), w, q);
}
WSeries Y(int w, int q)
{
    return WSeries::y(w, q);
}

} // namespace

TEST_SUITE("exact-series")
{
    TEST_CASE("rational parsing and printing")
    {
        CHECK(Rational::parse("6/4") == Rational(3, 2));
        CHECK(Rational::parse(" -7 ") == Rational(-7));
        CHECK(Rational::parse("3/-6") == Rational(-1, 2));
        CHECK(Rational(5).to_fraction_string() == "5/1");
        CHECK(Rational(5).to_string() == "5");
        CHECK(Rational(-2, 6).to_string() == "-1/3");
        CHECK_THROWS_AS(Rational::parse("1/0"), hirzebruch::error);
        CHECK_THROWS_AS(Rational::parse("abc"), domain_error);
        CHECK_THROWS_AS(Rational::parse("1/"), domain_error);
        CHECK_THROWS_AS(Rational(1) / Rational(0), hirzebruch::error);
    }

    TEST_CASE("rational helpers")
    {
        CHECK(binomial(5, 2) == Rational(10));
        CHECK(binomial(3, 5) == Rational(0));
        CHECK(factorial(6) == Rational(720));
        CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
        Rational acc(1);
        acc.add_product(Rational(2), Rational(1, 4));
        CHECK(acc == Rational(3, 2));
        CHECK(Rational(1, 3) < Rational(1, 2));
    }

    TEST_CASE("unipoly arithmetic and printing")
    {
        const UniPoly u = UniPoly::monomial(Rational(1), 1);
        const UniPoly one = UniPoly::constant(Rational(1));
        CHECK((one - u).to_string("U") == "1-U");
        CHECK(UniPoly({-3, -1, 1, 2, 1}).to_string("U") == "U^4+2U^3+U^2-U-3");
        CHECK(UniPoly({0, 0, 3, 3, -3, -3}).to_string("U") == "-3U^5-3U^4+3U^3+3U^2");
        CHECK(UniPoly{}.to_string("U") == "0");
        CHECK(UniPoly({Rational(1, 2), 0, -1}).to_string("y") == "1/2-y^2");

        const UniPoly p = pow(u + one, 3);
        CHECK(p == UniPoly({1, 3, 3, 1}));
        CHECK(p.evaluate(Rational(1)) == Rational(8));
        const auto [quo, rem] = divmod(p, u + one);
        CHECK(quo == pow(u + one, 2));
        CHECK(rem.is_zero());
        CHECK(divides(u - one, pow(u, 12) - one));
        CHECK_FALSE(divides(u + one, u * u + one));
        CHECK(UniPoly({0, 0, 5}).valuation() == 2);
        CHECK(p.truncated(1) == UniPoly({1, 3}));
    }

    TEST_CASE("monomials")
    {
        const Monomial m{{Var::L(), 2}, {Var::chern(1), 1}};
        CHECK(m.weight() == 3);
        CHECK(m.to_string() == "L^2*c1");
        CHECK(Monomial().to_string() == "1");
        CHECK(Var::from_name("c3") == Var::chern(3));
        CHECK(Var::from_name("H") == Var::H());
        CHECK_FALSE(Var::from_name("c0").has_value());
        CHECK_FALSE(Var::from_name("x").has_value());
        CHECK(Monomial(Var::L(), 3) < m);
        CHECK(base_monomials_of_weight(2, 2).size() == 4);
        CHECK(base_monomials_of_weight(3, 3).size() == 7);
    }

    TEST_CASE("construction and truncation")
    {
        const WSeries l = L(2, 1);
        CHECK((l * l * l).is_zero());
        CHECK((Y(2, 1) * Y(2, 1)).is_zero());
        CHECK(l.min_weight() == 1);
        CHECK(WSeries(2, 1).min_weight() == -1);
        CHECK(WSeries::one(3, 2).weight_zero_part() == UniPoly({1}));
        CHECK_THROWS_AS(truncate(l, 3, 1), truncation_deficit);
        CHECK_THROWS_AS(l + L(3, 1), truncation_mismatch);
        CHECK_THROWS_AS(WSeries(-1, 0), hirzebruch::error);
    }

    TEST_CASE("inverse of (1 - L) to weight 3")
    {
        const WSeries inv = inverse(WSeries::one(3, 0) - L(3, 0));
        WSeries expected = WSeries::one(3, 0) + L(3, 0) + pow(L(3, 0), 2) + pow(L(3, 0), 3);
        CHECK(inv == expected);
        CHECK_THROWS_AS(inverse(L(3, 0)), not_a_unit);
    }

    TEST_CASE("inverse with a y-polynomial unit part")
    {
        const WSeries a = WSeries::one(3, 4) + Y(3, 4) + L(3, 4);
        CHECK(a * inverse(a) == WSeries::one(3, 4));
    }

    TEST_CASE("exp and log")
    {
        const WSeries e = exp(L(3, 0));
        CHECK(e.coefficient(Monomial(Var::L(), 3), 0) == Rational(1, 6));
        CHECK(log(e) == L(3, 0));
        CHECK_THROWS_AS(exp(Y(3, 1)), domain_error);
        CHECK_THROWS_AS(log(WSeries::constant(Rational(2), 3, 0)), domain_error);
    }

    TEST_CASE("substitute")
    {
        const WSeries h = H(3, 1);
        const WSeries s = substitute(h * h + L(3, 1), Var::H(), -L(3, 1));
        CHECK(s == L(3, 1) * L(3, 1) + L(3, 1));
        CHECK_THROWS_AS(substitute(h, Var::H(), Y(3, 1)), domain_error);
        CHECK_THROWS_AS(substitute(h, Var::chern(2), L(3, 1)), domain_error);
    }

    TEST_CASE("reweight, weight_scale and extraction")
    {
        const WSeries a = L(3, 2) * L(3, 2);
        const WSeries expected = a + Rational(2) * a * Y(3, 2) + a * Y(3, 2) * Y(3, 2);
        CHECK(reweight_by_one_plus_y(a) == expected);
        CHECK(weight_scale(L(3, 0) + pow(L(3, 0), 3)) == L(3, 0) + Rational(3) * pow(L(3, 0), 3));
        const WSeries b = L(3, 2) + Y(3, 2) * L(3, 2) * H(3, 2);
        CHECK(coeff(b, 2, 1) == L(2, 0) * H(2, 0));
        CHECK(y_part(b, 0) == L(3, 0));
        CHECK(weight_part(b, 1) == L(3, 2));
        CHECK(diff_H(H(3, 0) * H(3, 0) * L(3, 0)) == Rational(2) * H(3, 0) * L(3, 0));
    }

    TEST_CASE("property: commutative ring axioms")
    {
        std::mt19937_64 rng(7);
        for (int i = 0; i < 25; ++i) {
            const auto a = testing::random_series(rng, 5, 3, 6);
            const auto b = testing::random_series(rng, 5, 3, 6);
            const auto c = testing::random_series(rng, 5, 3, 6);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (b - a) == b);
            CHECK(a * WSeries::one(5, 3) == a);
        }
    }

    TEST_CASE("property: inverse, exp and log")
    {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 20; ++i) {
            const auto n = testing::random_series(rng, 5, 3, 6, 1);
            const auto m = testing::random_series(rng, 5, 3, 6, 1);
            const WSeries unit = WSeries::one(5, 3) + n;
            CHECK(unit * inverse(unit) == WSeries::one(5, 3));
            CHECK(log(exp(n)) == n);
            CHECK(exp(log(unit)) == unit);
            CHECK(exp(n + m) == exp(n) * exp(m));
        }
    }

    TEST_CASE("property: truncation is a ring map")
    {
        std::mt19937_64 rng(13);
        for (int i = 0; i < 20; ++i) {
            const auto a = testing::random_series(rng, 6, 4, 8);
            const auto b = testing::random_series(rng, 6, 4, 8);
            CHECK(truncate(a * b, 4, 2) == truncate(a, 4, 2) * truncate(b, 4, 2));
            CHECK(truncate(a + b, 3, 1) == truncate(a, 3, 1) + truncate(b, 3, 1));
        }
    }

    TEST_CASE("property: reweighting is multiplicative, derivations obey Leibniz")
    {
        std::mt19937_64 rng(17);
        for (int i = 0; i < 20; ++i) {
            const auto a = testing::random_series(rng, 5, 6, 6);
            const auto b = testing::random_series(rng, 5, 6, 6);
            CHECK(reweight_by_one_plus_y(a * b) == reweight_by_one_plus_y(a) * reweight_by_one_plus_y(b));
            CHECK(weight_scale(a * b) == weight_scale(a) * b + a * weight_scale(b));
            CHECK(truncate(diff_H(a * b), 4, 6) == truncate(diff_H(a) * b + a * diff_H(b), 4, 6));
        }
    }

    TEST_CASE("property: substitution is a ring map")
    {
        std::mt19937_64 rng(19);
        for (int i = 0; i < 15; ++i) {
            const auto a = testing::random_series(rng, 5, 2, 6);
            const auto b = testing::random_series(rng, 5, 2, 6);
            const auto r = testing::random_series(rng, 5, 2, 3, 1);
            CHECK(substitute(a * b, Var::H(), r) == substitute(a, Var::H(), r) * substitute(b, Var::H(), r));
        }
    }
}
