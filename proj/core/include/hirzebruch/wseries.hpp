#ifndef HIRZEBRUCH_WSERIES_HPP
#define HIRZEBRUCH_WSERIES_HPP

#include <span>
#include <string>
#include <vector>

#include <hirzebruch/monomial.hpp>
#include <hirzebruch/rational.hpp>
#include <hirzebruch/unipoly.hpp>

namespace hirzebruch
{

// Weight-truncated series over Q in L, H, c_i with a polynomial direction y.
//
// Terms of weight > wmax or y-degree > qmax are never stored. The t-grading
// of generating series is identified with the weight, so "coefficient of t^k"
// is the weight-k homogeneous part. y carries weight 0.
//
// Values are immutable once built: all operations are free functions
// returning new series, so a WSeries may be shared across threads freely.
class WSeries
{
public:
    struct Term {
        Monomial mono;
        int ydeg = 0;
        Rational coeff;

        friend bool operator==(const Term &, const Term &) = default;
    };

    // The zero series.
    WSeries(int wmax, int qmax);

    static WSeries constant(const Rational &c, int wmax, int qmax);
    static WSeries one(int wmax, int qmax)
    {
        return constant(Rational(1), wmax, qmax);
    }
    static WSeries variable(Var v, int wmax, int qmax);
    static WSeries y(int wmax, int qmax);
    static WSeries monomial(const Rational &c, const Monomial &m, int ydeg, int wmax, int qmax);
    // Weight-0 series p(y), truncated at qmax.
    static WSeries y_polynomial(const UniPoly &p, int wmax, int qmax);
    // Canonicalises: merges duplicate keys, drops zeros and anything beyond
    // the truncation orders.
    static WSeries from_terms(int wmax, int qmax, std::vector<Term> terms);

    int wmax() const
    {
        return m_wmax;
    }
    int qmax() const
    {
        return m_qmax;
    }
    // Sorted by (weight, y-degree, monomial).
    std::span<const Term> terms() const
    {
        return m_terms;
    }
    std::size_t size() const
    {
        return m_terms.size();
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }

    Rational coefficient(const Monomial &m, int ydeg) const;
    // Smallest weight carrying a nonzero term, -1 for the zero series.
    int min_weight() const;
    // Largest y-degree carrying a nonzero term, -1 for the zero series.
    int max_ydeg() const;
    bool involves(Var v) const;
    // The weight-0 part as a polynomial in y.
    UniPoly weight_zero_part() const;

    friend bool operator==(const WSeries &a, const WSeries &b) = default;

    friend WSeries operator+(const WSeries &a, const WSeries &b);
    friend WSeries operator-(const WSeries &a, const WSeries &b);
    friend WSeries operator-(const WSeries &a);
    friend WSeries operator*(const WSeries &a, const WSeries &b);
    friend WSeries operator*(const Rational &c, const WSeries &a);

private:
    int m_wmax;
    int m_qmax;
    std::vector<Term> m_terms;
};

WSeries add(const WSeries &a, const WSeries &b);
WSeries mul(const WSeries &a, const WSeries &b);
WSeries pow(const WSeries &a, unsigned exponent);

// Multiplicative inverse; the y^0 coefficient of the unit monomial must be
// nonzero. Throws not_a_unit otherwise.
WSeries inverse(const WSeries &a);

// exp(a) for a with no weight-0 content at all (including pure y terms).
WSeries exp(const WSeries &a);
// log(a) for a whose weight-0 part is exactly 1.
WSeries log(const WSeries &a);

// Replaces v by `replacement`. The replacement must have no weight-0 part and
// lowest weight >= weight(v), so the result is exact to the same wmax.
WSeries substitute(const WSeries &a, Var v, const WSeries &replacement);

// Multiplies the weight-k part by (1+y)^k: t -> t(1+y) on generating series.
WSeries reweight_by_one_plus_y(const WSeries &a);

// Formal partial derivative. wmax is kept; the top weight of the result is
// only meaningful to wmax - weight(v).
WSeries diff(const WSeries &a, Var v);
inline WSeries diff_H(const WSeries &a)
{
    return diff(a, Var::H());
}

// Multiplies the weight-k part by k (the operator t d/dt).
WSeries weight_scale(const WSeries &a);

// Weight-k, y^q part as a y-free series with orders (k, 0).
WSeries coeff(const WSeries &a, int k, int q);
// Weight-k part, same orders as a.
WSeries weight_part(const WSeries &a, int k);
// Coefficient of y^q across all weights, as a series with orders (wmax, 0).
WSeries y_part(const WSeries &a, int q);
// Drops terms beyond the new (smaller or equal) orders.
WSeries truncate(const WSeries &a, int wmax, int qmax);

// Plain-text rendering, e.g. "12*L*c2 - 72*L^2*c1 + 432*L^3 + (1/2*L)*y".
std::string to_string(const WSeries &a);

} // namespace hirzebruch

#endif
