#ifndef HIRZEBRUCH_RATIONAL_HPP
#define HIRZEBRUCH_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hirzebruch
{

// Exact rational number, always kept in lowest terms with a positive
// denominator. Thin value wrapper around GMP's mpq_class.
class Rational
{
public:
    Rational() = default;
    Rational(long n) : m_value(n) {}
    Rational(int n) : m_value(n) {}
    Rational(long num, long den);
    explicit Rational(const mpz_class &n) : m_value(n) {}
    Rational(const mpz_class &num, const mpz_class &den);

    // Accepts "n", "-n", "n/d" (d nonzero, sign allowed on either part).
    static Rational parse(std::string_view text);

    const mpq_class &value() const
    {
        return m_value;
    }
    mpz_class numerator() const
    {
        return m_value.get_num();
    }
    mpz_class denominator() const
    {
        return m_value.get_den();
    }

    bool is_zero() const
    {
        return sgn(m_value) == 0;
    }
    bool is_one() const
    {
        return m_value == 1;
    }
    bool is_integer() const
    {
        return m_value.get_den() == 1;
    }
    int sign() const
    {
        return sgn(m_value);
    }

    // "num/den", always with an explicit denominator.
    std::string to_fraction_string() const;
    // "n" for integers, "n/d" otherwise.
    std::string to_string() const;

    Rational &operator+=(const Rational &o)
    {
        m_value += o.m_value;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        m_value -= o.m_value;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        m_value *= o.m_value;
        return *this;
    }
    Rational &operator/=(const Rational &o);

    // this += a * b without a temporary Rational.
    void add_product(const Rational &a, const Rational &b);

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }
    friend Rational operator-(const Rational &a)
    {
        Rational r;
        r.m_value = -a.m_value;
        return r;
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.m_value == b.m_value;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r)
    {
        return os << r.to_string();
    }

private:
    mpq_class m_value;
};

Rational pow(const Rational &base, unsigned exponent);
Rational binomial(long n, long k);
Rational factorial(unsigned n);

} // namespace hirzebruch

#endif
