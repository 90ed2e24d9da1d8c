#include <hirzebruch/errors.hpp>
#include <hirzebruch/unipoly.hpp>

#include <algorithm>
#include <sstream>

namespace hirzebruch
{

UniPoly::UniPoly(std::initializer_list<Rational> ascending) : m_coeffs(ascending)
{
    trim();
}

UniPoly::UniPoly(std::vector<Rational> ascending) : m_coeffs(std::move(ascending))
{
    trim();
}

UniPoly UniPoly::constant(const Rational &c)
{
    return UniPoly({c});
}

UniPoly UniPoly::monomial(const Rational &c, int k)
{
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim()
{
    while (!m_coeffs.empty() && m_coeffs.back().is_zero()) {
        m_coeffs.pop_back();
    }
}

Rational UniPoly::coeff(int k) const
{
    if (k < 0 || k > degree()) {
        return Rational(0);
    }
    return m_coeffs[static_cast<std::size_t>(k)];
}

Rational UniPoly::leading() const
{
    return is_zero() ? Rational(0) : m_coeffs.back();
}

int UniPoly::valuation() const
{
    for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
        if (!m_coeffs[i].is_zero()) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

Rational UniPoly::evaluate(const Rational &x) const
{
    Rational acc;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

UniPoly UniPoly::truncated(int n) const
{
    if (n < 0) {
        return {};
    }
    if (degree() <= n) {
        return *this;
    }
    return UniPoly(std::vector<Rational>(m_coeffs.begin(), m_coeffs.begin() + n + 1));
}

UniPoly &UniPoly::operator+=(const UniPoly &o)
{
    if (o.m_coeffs.size() > m_coeffs.size()) {
        m_coeffs.resize(o.m_coeffs.size());
    }
    for (std::size_t i = 0; i < o.m_coeffs.size(); ++i) {
        m_coeffs[i] += o.m_coeffs[i];
    }
    trim();
    return *this;
}

UniPoly &UniPoly::operator-=(const UniPoly &o)
{
    if (o.m_coeffs.size() > m_coeffs.size()) {
        m_coeffs.resize(o.m_coeffs.size());
    }
    for (std::size_t i = 0; i < o.m_coeffs.size(); ++i) {
        m_coeffs[i] -= o.m_coeffs[i];
    }
    trim();
    return *this;
}

UniPoly &UniPoly::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        m_coeffs.clear();
        return *this;
    }
    for (auto &x : m_coeffs) {
        x *= c;
    }
    return *this;
}

UniPoly operator*(const UniPoly &a, const UniPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.m_coeffs.size() + b.m_coeffs.size() - 1);
    for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
        if (a.m_coeffs[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.m_coeffs.size(); ++j) {
            out[i + j].add_product(a.m_coeffs[i], b.m_coeffs[j]);
        }
    }
    return UniPoly(std::move(out));
}

std::string UniPoly::to_string(std::string_view var) const
{
    if (is_zero()) {
        return "0";
    }
    const bool ascending = leading().sign() < 0 && m_coeffs.front().sign() > 0;
    std::vector<int> order;
    for (int k = 0; k <= degree(); ++k) {
        if (!m_coeffs[static_cast<std::size_t>(k)].is_zero()) {
            order.push_back(k);
        }
    }
    if (!ascending) {
        std::reverse(order.begin(), order.end());
    }

    std::ostringstream os;
    bool first = true;
    for (const int k : order) {
        const Rational &c = m_coeffs[static_cast<std::size_t>(k)];
        const Rational mag = c.sign() < 0 ? -c : c;
        if (c.sign() < 0) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one()) {
            os << mag;
        }
        os << var;
        if (k > 1) {
            os << '^' << k;
        }
    }
    return os.str();
}

UniPoly pow(const UniPoly &base, unsigned exponent)
{
    UniPoly result = UniPoly::constant(Rational(1));
    for (unsigned i = 0; i < exponent; ++i) {
        result = result * base;
    }
    return result;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly &n, const UniPoly &d)
{
    if (d.is_zero()) {
        throw domain_error("polynomial division by zero");
    }
    UniPoly q;
    UniPoly r = n;
    const Rational lead = d.leading();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const int shift = r.degree() - d.degree();
        const UniPoly t = UniPoly::monomial(r.leading() / lead, shift);
        q += t;
        r -= t * d;
    }
    return {q, r};
}

bool divides(const UniPoly &d, const UniPoly &n)
{
    return divmod(n, d).second.is_zero();
}

} // namespace hirzebruch
