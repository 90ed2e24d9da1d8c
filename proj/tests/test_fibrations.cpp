#include <doctest.h>

#include <hirzebruch/char_classes.hpp>
#include <hirzebruch/errors.hpp>
#include <hirzebruch/fibrations.hpp>
#include <hirzebruch/pushforward.hpp>

using namespace hirzebruch;

namespace
{

const int W = 4;
const int Q = 4;

WSeries var(Var v)
{
    return WSeries::variable(v, W + 3, Q);
}

// sum_{k>=0} (-x)^k / (k+1)!, i.e. (1 - e^{-x}) / x.
WSeries one_minus_exp_over(const WSeries &x)
{
    WSeries acc = WSeries::one(x.wmax(), x.qmax());
    WSeries term = acc;
    for (int k = 1; k <= x.wmax(); ++k) {
        term = term * (-x);
        acc = acc + Rational(1) / factorial(static_cast<unsigned>(k + 1)) * term;
    }
    return acc;
}

WSeries e_minus(const WSeries &x)
{
    return exp(-x);
}

UniPoly upoly(std::initializer_list<int> ascending)
{
    std::vector<Rational> c;
    for (const int a : ascending) {
        c.emplace_back(a);
    }
    return UniPoly(c);
}

} // namespace

TEST_SUITE("fibrations")
{
    TEST_CASE("catalog")
    {
        const auto all = catalog();
        REQUIRE(all.size() == 4);
        for (const auto &s : all) {
            CHECK(s.fiber_dimension() == 1);
            CHECK_NOTHROW(validate(s, true));
            CHECK(s.closed_q.has_value());
            CHECK(family_name(*s.closed_q) == s.name);
        }
        CHECK(catalog_spec(Family::E7).bundle == BundleSpec{{0, 1, 2, 2}});
        CHECK(catalog_spec(Family::E8).n_roots == std::vector<RootForm>{{3, 6}});
        CHECK(default_f_roots({{0, 2}}) == std::vector<RootForm>{{1, 0}, {1, 2}});
        CHECK_FALSE(family_from_name("E9").has_value());
    }

    TEST_CASE("validation errors")
    {
        FibrationSpec s = catalog_spec(Family::E6);
        s.f_roots[0] = {1, 5};
        CHECK_THROWS_AS(validate(s, false), invalid_spec);
        s = catalog_spec(Family::E6);
        s.n_roots = {{0, 3}};
        CHECK_THROWS_AS(validate(s, false), invalid_spec);
        s = catalog_spec(Family::E6);
        s.n_roots.push_back({1, 1});
        CHECK_THROWS_AS(validate(s, true), invalid_spec);
        s.n_roots.push_back({1, 1});
        s.n_roots.push_back({1, 1});
        CHECK_THROWS_AS(validate(s, false), invalid_spec);
    }

    TEST_CASE("build_D reproduces the displayed D5 integrand")
    {
        const WSeries h = var(Var::H());
        const WSeries l = var(Var::L());
        const WSeries y = WSeries::y(W + 3, Q);
        const WSeries one = WSeries::one(W + 3, Q);
        const WSeries hl = h + l;
        const WSeries n = Rational(2) * h + Rational(2) * l;
        const WSeries num = (one + y * e_minus(h)) * pow(one + y * e_minus(hl), 3) * pow(one - e_minus(n), 2);
        const WSeries den = pow(one + y * e_minus(n), 2) * (one + y);
        const WSeries todd = inverse(one_minus_exp_over(h)) * pow(inverse(one_minus_exp_over(hl)), 3);
        const WSeries display = num * inverse(den) * todd;
        CHECK(build_D(catalog_spec(Family::D5), W + 3, Q) == display);
        CHECK_THROWS_AS(build_D(catalog_spec(Family::D5), 1, Q), truncation_deficit);
    }

    TEST_CASE("the identity fibration pushes forward to 1")
    {
        FibrationSpec s{"point", {{0}}, {{1, 0}}, {}, std::nullopt};
        CHECK_NOTHROW(validate(s, false));
        CHECK(derived_Q(s, 3, 3) == WSeries::one(3, 3));
    }

    TEST_CASE("derived Q equals the closed form")
    {
        for (const auto &s : catalog()) {
            CAPTURE(s.name);
            CHECK(derived_Q(s, W, Q) == closed_form_Q(*s.closed_q, W, Q));
        }
    }

    TEST_CASE("closed form strings")
    {
        CHECK(closed_form_string(Family::D5) == "4 - y + (y+1)(yU - 3)/(yU^2 + 1) - U(y+1)^2/(yU^2 + 1)^2");
        CHECK(closed_form_string(Family::E6) == "3 - y + (y+1)(yU^2 - U - 2)/(yU^3 + 1)");
        CHECK(closed_form_string(Family::E7) == "2 - y + (y+1)(yU^3 - U - 1)/(yU^4 + 1)");
        CHECK(closed_form_string(Family::E8) == "1 - y + (y+1)(yU^5 - U - 0)/(yU^6 + 1)");
    }

    TEST_CASE("Q at y = 0 and at U = 1")
    {
        const WSeries one_minus_u = WSeries::one(W, 0) - exp(-WSeries::variable(Var::L(), W, 0));
        for (const auto f : all_families()) {
            const WSeries q = closed_form_Q(f, W, Q);
            CHECK(y_part(q, 0) == one_minus_u);
            CHECK(q.weight_zero_part().is_zero());
            CHECK(q.min_weight() >= 1);
        }
    }

    TEST_CASE("P polynomials: tabulated rows")
    {
        const UniPoly one_minus_u = upoly({1, -1});
        for (const auto f : all_families()) {
            CHECK(p_polynomial(f, 0) == one_minus_u);
            for (int n = 0; n <= 8; ++n) {
                CHECK(p_polynomial(f, n) == p_table(f, n));
                CHECK(p_polynomial(f, n).evaluate(Rational(1)) == Rational(0));
            }
        }
        CHECK(p_polynomial(Family::E6, 1).to_string("U") == "U^4+2U^3+U^2-U-3");
        CHECK(p_polynomial(Family::E7, 1) == upoly({-2, -1, 0, 1, 1, 1}));
        CHECK(p_polynomial(Family::E8, 1) == upoly({-1, -1, 0, 0, 0, 1, 0, 1}));
        CHECK(p_polynomial(Family::D5, 1) == upoly({-4, -1, 3, 2}));
        CHECK_THROWS_AS(p_polynomial(Family::D5, -1), out_of_range);
    }

    TEST_CASE("P polynomials: closed forms for n >= 2, built independently")
    {
        const UniPoly u = upoly({0, 1});
        const UniPoly one = upoly({1});
        for (int n = 2; n <= 6; ++n) {
            const auto k = static_cast<unsigned>(n - 2);
            const UniPoly d5 = -(u * (Rational(n + 1) * u - Rational(n - 2) * one) * (u - one) * pow(u + one, 2))
                               * pow(-(u * u), k);
            CHECK(p_polynomial(Family::D5, n) == d5);
            const UniPoly e6 = -(pow(u, 2) * (pow(u, 3) - one) * pow(u + one, 2)) * pow(-pow(u, 3), k);
            CHECK(p_polynomial(Family::E6, n) == e6);
            const UniPoly e7 = -(pow(u, 3) * (pow(u, 4) - one) * (u * u + u + one)) * pow(-pow(u, 4), k);
            CHECK(p_polynomial(Family::E7, n) == e7);
            const UniPoly e8 = -(pow(u, 5) * (pow(u, 6) - one) * (u * u + one)) * pow(-pow(u, 6), k);
            CHECK(p_polynomial(Family::E8, n) == e8);
        }
        CHECK(p_table_string(Family::D5, 2) == "-U(3U)(U-1)(U+1)^2");
        CHECK(p_table_string(Family::D5, 3) == "-U(4U-1)(U-1)(U+1)^2(-U^2)");
        CHECK(p_table_string(Family::E8, 4) == "-U^5(U^6-1)(U^2+1)(-U^6)^2");
    }

    TEST_CASE("U-polynomial at exp(-L)")
    {
        const WSeries l = WSeries::variable(Var::L(), 3, 0);
        CHECK(u_polynomial_at_exp(upoly({1, -1}), 3) == WSeries::one(3, 0) - exp(-l));
    }

    TEST_CASE("pushforward classes")
    {
        const auto e8 = catalog_spec(Family::E8);
        const WSeries c0 = pushforward_class(e8, 0, 2);
        const WSeries l = WSeries::variable(Var::L(), 2, 0);
        const WSeries c1 = WSeries::variable(Var::chern(1), 2, 0);
        const WSeries c2 = WSeries::variable(Var::chern(2), 2, 0);
        const WSeries td = WSeries::one(2, 0) + Rational(1, 2) * c1 + Rational(1, 12) * (c1 * c1 + c2);
        CHECK(c0 == (WSeries::one(2, 0) - exp(-l)) * td);
        CHECK_THROWS_AS(pushforward_class(e8, 4, 2), out_of_range);

        FibrationSpec custom = e8;
        custom.name = "custom";
        custom.closed_q.reset();
        for (int q = 0; q <= 3; ++q) {
            CHECK(pushforward_class(custom, q, 2) == pushforward_class(e8, q, 2));
        }
    }
}
