#ifndef HIRZEBRUCH_UNIPOLY_HPP
#define HIRZEBRUCH_UNIPOLY_HPP

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <hirzebruch/rational.hpp>

namespace hirzebruch
{

// Dense univariate polynomial over the rationals. Coefficients are stored in
// ascending degree with no trailing zeros; the zero polynomial is empty.
class UniPoly
{
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> ascending);
    explicit UniPoly(std::vector<Rational> ascending);

    static UniPoly constant(const Rational &c);
    // c * x^k
    static UniPoly monomial(const Rational &c, int k);

    // -1 for the zero polynomial.
    int degree() const
    {
        return static_cast<int>(m_coeffs.size()) - 1;
    }
    bool is_zero() const
    {
        return m_coeffs.empty();
    }
    // Zero for k outside [0, degree].
    Rational coeff(int k) const;
    const std::vector<Rational> &coefficients() const
    {
        return m_coeffs;
    }
    Rational leading() const;
    // Multiplicity of the root 0.
    int valuation() const;

    Rational evaluate(const Rational &x) const;
    // Drops all terms of degree > n.
    UniPoly truncated(int n) const;

    UniPoly &operator+=(const UniPoly &o);
    UniPoly &operator-=(const UniPoly &o);
    UniPoly &operator*=(const Rational &c);

    friend UniPoly operator+(UniPoly a, const UniPoly &b)
    {
        return a += b;
    }
    friend UniPoly operator-(UniPoly a, const UniPoly &b)
    {
        return a -= b;
    }
    friend UniPoly operator-(UniPoly a)
    {
        return a *= Rational(-1);
    }
    friend UniPoly operator*(const UniPoly &a, const UniPoly &b);
    friend UniPoly operator*(const Rational &c, UniPoly a)
    {
        return a *= c;
    }

    friend bool operator==(const UniPoly &, const UniPoly &) = default;

    // Human readable form in the variable `var`, e.g. "U^4+2U^3+U^2-U-3".
    // Terms run in descending degree, except that a polynomial whose leading
    // coefficient is negative and whose constant term is positive is written
    // in ascending degree ("1-U") so that it starts with a positive term.
    std::string to_string(std::string_view var) const;

private:
    void trim();

    std::vector<Rational> m_coeffs;
};

UniPoly pow(const UniPoly &base, unsigned exponent);

// Euclidean division: returns (quotient, remainder) with deg r < deg d.
std::pair<UniPoly, UniPoly> divmod(const UniPoly &n, const UniPoly &d);

// True if d divides n exactly.
bool divides(const UniPoly &d, const UniPoly &n);

} // namespace hirzebruch

#endif
