#ifndef HIRZEBRUCH_TESTS_SUPPORT_HPP
#define HIRZEBRUCH_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include <hirzebruch/rational.hpp>
#include <hirzebruch/wseries.hpp>

namespace testing
{

using hirzebruch::Monomial;
using hirzebruch::Rational;
using hirzebruch::Var;
using hirzebruch::WSeries;

// Random series in L, H, c1, c2 and y with small rational coefficients.
// min_weight 1 gives something exp() accepts.
inline WSeries random_series(std::mt19937_64 &rng, int wmax, int qmax, int terms, int min_weight = 0)
{
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> var(0, 3);
    std::uniform_int_distribution<int> ydeg(0, qmax);
    std::uniform_int_distribution<int> weight(min_weight, wmax);
    const Var vars[] = {Var::L(), Var::H(), Var::chern(1), Var::chern(2)};
    std::vector<WSeries::Term> out;
    for (int i = 0; i < terms; ++i) {
        const int target = weight(rng);
        Monomial m;
        while (m.weight() < target) {
            const Var v = vars[var(rng)];
            if (m.weight() + v.weight() <= target) {
                m = m * Monomial(v);
            }
        }
        const int q = target == 0 && min_weight > 0 ? 0 : ydeg(rng);
        out.push_back({m, q, Rational(coeff(rng), den(rng))});
    }
    return WSeries::from_terms(wmax, qmax, std::move(out));
}

// Dense power series in one variable t over Q, truncated at t^n. An oracle
// that shares no code with WSeries.
struct TSeries {
    std::vector<Rational> c;

    explicit TSeries(int n) : c(static_cast<std::size_t>(n + 1)) {}

    int order() const
    {
        return static_cast<int>(c.size()) - 1;
    }

    friend TSeries operator*(const TSeries &a, const TSeries &b)
    {
        TSeries r(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            for (int j = 0; i + j <= a.order(); ++j) {
                r.c[i + j] += a.c[i] * b.c[j];
            }
        }
        return r;
    }

    // e^{s t}
    static TSeries exp_linear(const Rational &s, int n)
    {
        TSeries r(n);
        Rational term(1);
        for (int k = 0; k <= n; ++k) {
            r.c[k] = term;
            term = term * s / Rational(k + 1);
        }
        return r;
    }

    // log of a series with constant term 1, via g' = g * (log g)'.
    TSeries log1() const
    {
        TSeries r(order());
        for (int k = 1; k <= order(); ++k) {
            Rational acc = Rational(k) * c[k];
            for (int j = 1; j < k; ++j) {
                acc -= Rational(j) * r.c[j] * c[k - j];
            }
            r.c[k] = acc / Rational(k);
        }
        return r;
    }
};

// [t^k] ln((1 + y e^{-t}) t / (1 - e^{-t})) for k = 1..n at a rational y.
inline std::vector<Rational> f_coefficients_at(const Rational &y, int n)
{
    TSeries g = TSeries::exp_linear(Rational(-1), n);
    for (auto &x : g.c) {
        x = x * y / (Rational(1) + y);
    }
    g.c[0] = Rational(1);
    TSeries q(n);
    for (int k = 0; k <= n; ++k) {
        q.c[k] = Rational(k % 2 == 0 ? 1 : -1) / hirzebruch::factorial(static_cast<unsigned>(k + 1));
    }
    const TSeries a = g.log1();
    const TSeries b = q.log1();
    std::vector<Rational> out(static_cast<std::size_t>(n + 1));
    for (int k = 1; k <= n; ++k) {
        out[k] = a.c[k] - b.c[k];
    }
    return out;
}

} // namespace testing

#endif
