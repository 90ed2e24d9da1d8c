#include <hirzebruch/errors.hpp>
#include <hirzebruch/rational.hpp>

#include <cctype>
#include <string>

namespace hirzebruch
{

namespace
{

mpz_class parse_integer(std::string_view text, std::string_view whole)
{
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        ++i;
    }
    if (i == text.size()) {
        throw domain_error("malformed rational '" + std::string(whole) + "'");
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw domain_error("malformed rational '" + std::string(whole) + "'");
        }
    }
    std::string digits(text);
    if (digits.front() == '+') {
        digits.erase(0, 1);
    }
    return mpz_class(digits, 10);
}

} // namespace

Rational::Rational(long num, long den) : m_value(num, den)
{
    if (den == 0) {
        throw domain_error("rational with zero denominator");
    }
    m_value.canonicalize();
}

Rational::Rational(const mpz_class &num, const mpz_class &den) : m_value(num, den)
{
    if (den == 0) {
        throw domain_error("rational with zero denominator");
    }
    m_value.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) {
        trimmed.remove_prefix(1);
    }
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
        trimmed.remove_suffix(1);
    }
    const auto slash = trimmed.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(trimmed, text));
    }
    const auto num = parse_integer(trimmed.substr(0, slash), text);
    const auto den = parse_integer(trimmed.substr(slash + 1), text);
    return Rational(num, den);
}

std::string Rational::to_fraction_string() const
{
    return m_value.get_num().get_str() + "/" + m_value.get_den().get_str();
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return m_value.get_num().get_str();
    }
    return to_fraction_string();
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw domain_error("division by zero");
    }
    m_value /= o.m_value;
    return *this;
}

void Rational::add_product(const Rational &a, const Rational &b)
{
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.m_value.get_mpq_t(), b.m_value.get_mpq_t());
    mpq_add(m_value.get_mpq_t(), m_value.get_mpq_t(), tmp.get_mpq_t());
}

Rational pow(const Rational &base, unsigned exponent)
{
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
    return Rational(num, den);
}

Rational binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) {
        return Rational(0);
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

Rational factorial(unsigned n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(r);
}

} // namespace hirzebruch
