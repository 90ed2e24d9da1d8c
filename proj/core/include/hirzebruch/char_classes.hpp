#ifndef HIRZEBRUCH_CHAR_CLASSES_HPP
#define HIRZEBRUCH_CHAR_CLASSES_HPP

#include <span>
#include <vector>

#include <hirzebruch/unipoly.hpp>
#include <hirzebruch/wseries.hpp>

namespace hirzebruch
{

// Integer linear form a*H + b*L standing for a Chern root.
struct RootForm {
    int a = 0;
    int b = 0;

    bool is_zero() const
    {
        return a == 0 && b == 0;
    }
    WSeries to_series(int wmax, int qmax) const;

    friend bool operator==(const RootForm &, const RootForm &) = default;
};

// num(y) / (1+y)^dpow with (1+y) cancelled out of num whenever dpow > 0.
class YFrac
{
public:
    YFrac() = default;
    YFrac(UniPoly num, int dpow);

    const UniPoly &num() const
    {
        return m_num;
    }
    int dpow() const
    {
        return m_dpow;
    }

    // num * (1+y)^(k - dpow); requires dpow <= k.
    UniPoly absorbed(int k) const;
    // num / (1+y)^dpow expanded in Q[y] modulo y^(qmax+1).
    UniPoly expanded(int qmax) const;
    Rational evaluate(const Rational &y) const;

    friend bool operator==(const YFrac &, const YFrac &) = default;

private:
    UniPoly m_num;
    int m_dpow = 0;
};

// The polynomial 1 + y.
UniPoly one_plus_y();

// lambda / (1 - e^{-lambda}) at lambda = r, to weight wmax.
WSeries todd_factor(RootForm r, int wmax, int qmax);

// 1 + y e^{sign * lambda}; sign = -1 gives the factor of a dual bundle.
WSeries chext_factor(RootForm r, int sign, int wmax, int qmax);

// C = 1 - c1 + c2 - c3 + ... in formal Chern classes, with t absorbed into
// the weight grading.
WSeries formal_chern_polynomial(int wmax, int qmax);

// -t C'/C for a series C with weight-0 part 1.
WSeries log_derivative_series(const WSeries &c);

// Weight-homogeneous power sums of the roots of C: element k is p_k
// (element 0 is the zero series).
std::vector<WSeries> power_sums(const WSeries &c);
std::vector<WSeries> power_sums_from_chern(int wmax, int qmax);

// Coefficients a_k of f = ln((1 + y e^{-t}) t / (1 - e^{-t})) for k <= kmax.
// Element 0 is zero: a_0 = ln(1+y) is carried as an explicit (1+y)^d factor.
std::vector<YFrac> f_coefficients(int kmax);

// sum_k a_k * S_k over the weight components S_k of s. With `absorb` each
// a_k is multiplied by (1+y)^k first (the t -> t(1+y) substitution), which
// keeps everything polynomial in y; otherwise (1+y)^{-dpow} is expanded.
WSeries hadamard_apply(std::span<const YFrac> coeffs, const WSeries &s, bool absorb);

// Hirzebruch series of a base of dimension d in formal Chern classes.
// top_only: the weight-d class (1+y)^d [t^d] exp(f . (-tC'/C)).
// Otherwise: the full class (1+y)^d exp(sum_k a_k p_k) up to weight d.
WSeries base_hirzebruch(int d, int qmax, bool top_only);

} // namespace hirzebruch

#endif
