#ifndef HIRZEBRUCH_GENSERIES_HPP
#define HIRZEBRUCH_GENSERIES_HPP

#include <map>
#include <optional>
#include <vector>

#include <hirzebruch/fibrations.hpp>
#include <hirzebruch/wseries.hpp>

namespace hirzebruch
{

// A base variety of dimension `dim`. Symbolic bases keep c_i and L formal;
// table bases carry the intersection number of every weight-dim monomial in
// L, c_1..c_dim.
struct BaseSpec {
    int dim = 0;
    std::optional<std::map<Monomial, Rational>> table;

    static BaseSpec symbolic(int d);
    // P^d with L = O(n): c_i = C(d+1, i) h^i, L = n h, and the integral of h^d is 1.
    static BaseSpec projective_space(int d, int n);
    // Throws invalid_spec for entries of the wrong weight or involving H.
    static BaseSpec from_table(int d, std::map<Monomial, Rational> table);

    bool is_symbolic() const
    {
        return !table.has_value();
    }
};

// chi(t, y) to t-order tmax: reweight(Q_t) * exp(f . (-tC'/C)) with the
// t -> t(1+y) substitution absorbed. The coefficient of (t^k, y^q) is the
// class whose integral over a k-dimensional base is chi_q.
WSeries chi_series(const FibrationSpec &spec, int tmax, int qmax);

// Integral over the base of a y-free class of weight base.dim.
Rational integrate(const WSeries &cls, const BaseSpec &base);

// The integrand class for chi_q over a base of dimension d (orders (d, 0)).
WSeries chi_class(const FibrationSpec &spec, int d, int q);

// chi_q(Y) over the base; with `verify` the value is recomputed through
// sum_i P_{q-i} H_i(B) and a mismatch raises verification_failure.
Rational chi_q(const FibrationSpec &spec, const BaseSpec &base, int q, bool verify = false);
// chi_0 .. chi_{dim+1}.
std::vector<Rational> chi_all(const FibrationSpec &spec, const BaseSpec &base, bool verify = false);

// 12 L t / (1 + 6 L t) * (1 + c1 t + c2 t^2 + ...) to t-order dmax.
WSeries euler_series_e8(int dmax);

} // namespace hirzebruch

#endif
