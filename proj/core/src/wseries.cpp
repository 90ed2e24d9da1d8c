#include <hirzebruch/errors.hpp>
#include <hirzebruch/wseries.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace hirzebruch
{

namespace
{

struct Key {
    Monomial mono;
    int ydeg;

    friend bool operator==(const Key &, const Key &) = default;
};

struct KeyHash {
    std::size_t operator()(const Key &k) const
    {
        return k.mono.hash() ^ (static_cast<std::size_t>(k.ydeg) * 0x9e3779b97f4a7c15ull);
    }
};

bool term_less(const WSeries::Term &a, const WSeries::Term &b)
{
    if (a.mono.weight() != b.mono.weight()) {
        return a.mono.weight() < b.mono.weight();
    }
    if (a.ydeg != b.ydeg) {
        return a.ydeg < b.ydeg;
    }
    return a.mono < b.mono;
}

void check_orders(int wmax, int qmax)
{
    if (wmax < 0 || qmax < 0 || wmax > 200) {
        throw domain_error("truncation orders out of range: wmax=" + std::to_string(wmax)
                           + ", qmax=" + std::to_string(qmax));
    }
}

void require_same_orders(const WSeries &a, const WSeries &b, const char *op)
{
    if (a.wmax() != b.wmax() || a.qmax() != b.qmax()) {
        std::ostringstream os;
        os << op << ": truncation mismatch (" << a.wmax() << ", " << a.qmax() << ") vs ("
           << b.wmax() << ", " << b.qmax() << ")";
        throw truncation_mismatch(os.str());
    }
}

using Accumulator = std::unordered_map<Key, Rational, KeyHash>;

std::vector<WSeries::Term> drain(Accumulator &acc)
{
    std::vector<WSeries::Term> out;
    out.reserve(acc.size());
    for (auto &[k, c] : acc) {
        if (!c.is_zero()) {
            out.push_back({k.mono, k.ydeg, std::move(c)});
        }
    }
    std::sort(out.begin(), out.end(), term_less);
    return out;
}

// Inverse of p in Q[y]/(y^(n+1)); p(0) must be nonzero.
UniPoly inverse_mod_y(const UniPoly &p, int n)
{
    const Rational c0 = p.coeff(0);
    if (c0.is_zero()) {
        throw not_a_unit("series has zero constant term and is not invertible");
    }
    std::vector<Rational> inv(static_cast<std::size_t>(n) + 1);
    inv[0] = Rational(1) / c0;
    for (int k = 1; k <= n; ++k) {
        Rational s;
        for (int j = 1; j <= k; ++j) {
            s.add_product(p.coeff(j), inv[static_cast<std::size_t>(k - j)]);
        }
        inv[static_cast<std::size_t>(k)] = -s / c0;
    }
    return UniPoly(std::move(inv));
}

} // namespace

WSeries::WSeries(int wmax, int qmax) : m_wmax(wmax), m_qmax(qmax)
{
    check_orders(wmax, qmax);
}

WSeries WSeries::constant(const Rational &c, int wmax, int qmax)
{
    return monomial(c, Monomial{}, 0, wmax, qmax);
}

WSeries WSeries::variable(Var v, int wmax, int qmax)
{
    return monomial(Rational(1), Monomial(v), 0, wmax, qmax);
}

WSeries WSeries::y(int wmax, int qmax)
{
    return monomial(Rational(1), Monomial{}, 1, wmax, qmax);
}

WSeries WSeries::monomial(const Rational &c, const Monomial &m, int ydeg, int wmax, int qmax)
{
    return from_terms(wmax, qmax, {Term{m, ydeg, c}});
}

WSeries WSeries::y_polynomial(const UniPoly &p, int wmax, int qmax)
{
    std::vector<Term> terms;
    for (int j = 0; j <= std::min(p.degree(), qmax); ++j) {
        terms.push_back({Monomial{}, j, p.coeff(j)});
    }
    return from_terms(wmax, qmax, std::move(terms));
}

WSeries WSeries::from_terms(int wmax, int qmax, std::vector<Term> terms)
{
    WSeries out(wmax, qmax);
    Accumulator acc;
    for (auto &t : terms) {
        if (t.ydeg < 0) {
            throw domain_error("negative y-degree");
        }
        if (t.mono.weight() > wmax || t.ydeg > qmax || t.coeff.is_zero()) {
            continue;
        }
        acc[Key{t.mono, t.ydeg}] += t.coeff;
    }
    out.m_terms = drain(acc);
    return out;
}

Rational WSeries::coefficient(const Monomial &m, int ydeg) const
{
    const Term probe{m, ydeg, Rational()};
    const auto it = std::lower_bound(m_terms.begin(), m_terms.end(), probe, term_less);
    if (it != m_terms.end() && it->mono == m && it->ydeg == ydeg) {
        return it->coeff;
    }
    return Rational(0);
}

int WSeries::min_weight() const
{
    return m_terms.empty() ? -1 : m_terms.front().mono.weight();
}

int WSeries::max_ydeg() const
{
    int q = -1;
    for (const auto &t : m_terms) {
        q = std::max(q, t.ydeg);
    }
    return q;
}

bool WSeries::involves(Var v) const
{
    return std::any_of(m_terms.begin(), m_terms.end(),
                       [v](const Term &t) { return t.mono.exponent(v) != 0; });
}

UniPoly WSeries::weight_zero_part() const
{
    std::vector<Rational> c(static_cast<std::size_t>(m_qmax) + 1);
    for (const auto &t : m_terms) {
        if (t.mono.weight() > 0) {
            break;
        }
        c[static_cast<std::size_t>(t.ydeg)] = t.coeff;
    }
    return UniPoly(std::move(c));
}

WSeries operator+(const WSeries &a, const WSeries &b)
{
    require_same_orders(a, b, "add");
    std::vector<WSeries::Term> merged;
    merged.reserve(a.m_terms.size() + b.m_terms.size());
    auto i = a.m_terms.begin();
    auto j = b.m_terms.begin();
    while (i != a.m_terms.end() || j != b.m_terms.end()) {
        if (j == b.m_terms.end() || (i != a.m_terms.end() && term_less(*i, *j))) {
            merged.push_back(*i++);
        } else if (i == a.m_terms.end() || term_less(*j, *i)) {
            merged.push_back(*j++);
        } else {
            Rational c = i->coeff + j->coeff;
            if (!c.is_zero()) {
                merged.push_back({i->mono, i->ydeg, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    WSeries out(a.m_wmax, a.m_qmax);
    out.m_terms = std::move(merged);
    return out;
}

WSeries operator-(const WSeries &a)
{
    WSeries out = a;
    for (auto &t : out.m_terms) {
        t.coeff = -t.coeff;
    }
    return out;
}

WSeries operator-(const WSeries &a, const WSeries &b)
{
    return a + (-b);
}

WSeries operator*(const Rational &c, const WSeries &a)
{
    WSeries out(a.m_wmax, a.m_qmax);
    if (c.is_zero()) {
        return out;
    }
    out.m_terms = a.m_terms;
    for (auto &t : out.m_terms) {
        t.coeff *= c;
    }
    return out;
}

WSeries operator*(const WSeries &a, const WSeries &b)
{
    require_same_orders(a, b, "mul");
    const int wmax = a.m_wmax;
    const int qmax = a.m_qmax;
    WSeries out(wmax, qmax);
    if (a.is_zero() || b.is_zero()) {
        return out;
    }

    // Terms are sorted by weight: for each weight w, b_end[w] is one past the
    // last term of b with weight <= w.
    std::vector<std::size_t> b_end(static_cast<std::size_t>(wmax) + 1, 0);
    {
        std::size_t idx = 0;
        for (int w = 0; w <= wmax; ++w) {
            while (idx < b.m_terms.size() && b.m_terms[idx].mono.weight() <= w) {
                ++idx;
            }
            b_end[static_cast<std::size_t>(w)] = idx;
        }
    }

    Accumulator acc;
    acc.reserve(a.m_terms.size() + b.m_terms.size());
    for (const auto &ta : a.m_terms) {
        const int room = wmax - ta.mono.weight();
        if (room < 0) {
            break;
        }
        const std::size_t end = b_end[static_cast<std::size_t>(room)];
        for (std::size_t k = 0; k < end; ++k) {
            const auto &tb = b.m_terms[k];
            const int q = ta.ydeg + tb.ydeg;
            if (q > qmax) {
                continue;
            }
            acc[Key{ta.mono * tb.mono, q}].add_product(ta.coeff, tb.coeff);
        }
    }
    out.m_terms = drain(acc);
    return out;
}

WSeries add(const WSeries &a, const WSeries &b)
{
    return a + b;
}

WSeries mul(const WSeries &a, const WSeries &b)
{
    return a * b;
}

WSeries pow(const WSeries &a, unsigned exponent)
{
    WSeries result = WSeries::one(a.wmax(), a.qmax());
    WSeries base = a;
    while (exponent > 0) {
        if (exponent & 1u) {
            result = result * base;
        }
        exponent >>= 1u;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

WSeries inverse(const WSeries &a)
{
    const int wmax = a.wmax();
    const int qmax = a.qmax();
    const UniPoly head = a.weight_zero_part();
    const WSeries head_inv = WSeries::y_polynomial(inverse_mod_y(head, qmax), wmax, qmax);
    // a = head * (1 + n) with n of weight >= 1, so 1/(1+n) terminates.
    const WSeries n = head_inv * (a - WSeries::y_polynomial(head, wmax, qmax));
    const WSeries one = WSeries::one(wmax, qmax);
    WSeries s = one;
    for (int j = 0; j < wmax; ++j) {
        s = one - n * s;
    }
    return s * head_inv;
}

WSeries exp(const WSeries &a)
{
    if (!a.is_zero() && a.min_weight() == 0) {
        throw domain_error("exp: argument has weight-0 content");
    }
    const WSeries one = WSeries::one(a.wmax(), a.qmax());
    WSeries s = one;
    for (int j = a.wmax(); j >= 1; --j) {
        s = one + Rational(1, j) * (a * s);
    }
    return s;
}

WSeries log(const WSeries &a)
{
    const UniPoly head = a.weight_zero_part();
    if (!(head == UniPoly::constant(Rational(1)))) {
        throw domain_error("log: weight-0 part must be exactly 1");
    }
    const int wmax = a.wmax();
    const WSeries n = a - WSeries::one(wmax, a.qmax());
    if (wmax == 0) {
        return WSeries(wmax, a.qmax());
    }
    // log(1+n) = n (c_1 + n (c_2 + ...)), c_j = (-1)^(j+1)/j.
    auto c = [](int j) { return Rational(j % 2 == 1 ? 1 : -1, j); };
    WSeries s = WSeries::constant(c(wmax), wmax, a.qmax());
    for (int j = wmax - 1; j >= 1; --j) {
        s = WSeries::constant(c(j), wmax, a.qmax()) + n * s;
    }
    return n * s;
}

WSeries substitute(const WSeries &a, Var v, const WSeries &replacement)
{
    require_same_orders(a, replacement, "substitute");
    if (!replacement.is_zero()) {
        if (replacement.min_weight() == 0) {
            throw domain_error("substitute: replacement for " + v.name() + " has weight-0 content");
        }
        if (replacement.min_weight() < v.weight()) {
            throw domain_error("substitute: replacement for " + v.name()
                               + " has lower weight than the variable; result would need terms "
                                 "beyond the truncation order");
        }
    }
    // Group by the exponent of v.
    std::map<int, std::vector<WSeries::Term>> groups;
    for (const auto &t : a.terms()) {
        const int e = t.mono.exponent(v);
        groups[e].push_back({t.mono.with_exponent(v, 0), t.ydeg, t.coeff});
    }
    WSeries result(a.wmax(), a.qmax());
    WSeries power = WSeries::one(a.wmax(), a.qmax());
    int power_exp = 0;
    for (auto &[e, terms] : groups) {
        while (power_exp < e) {
            power = power * replacement;
            ++power_exp;
        }
        result = result + WSeries::from_terms(a.wmax(), a.qmax(), std::move(terms)) * power;
    }
    return result;
}

WSeries reweight_by_one_plus_y(const WSeries &a)
{
    std::vector<WSeries::Term> out;
    for (const auto &t : a.terms()) {
        const int k = t.mono.weight();
        for (int j = 0; j <= k && t.ydeg + j <= a.qmax(); ++j) {
            out.push_back({t.mono, t.ydeg + j, t.coeff * binomial(k, j)});
        }
    }
    return WSeries::from_terms(a.wmax(), a.qmax(), std::move(out));
}

WSeries diff(const WSeries &a, Var v)
{
    std::vector<WSeries::Term> out;
    for (const auto &t : a.terms()) {
        const int e = t.mono.exponent(v);
        if (e == 0) {
            continue;
        }
        out.push_back({t.mono.with_exponent(v, e - 1), t.ydeg, t.coeff * Rational(e)});
    }
    return WSeries::from_terms(a.wmax(), a.qmax(), std::move(out));
}

WSeries weight_scale(const WSeries &a)
{
    std::vector<WSeries::Term> out;
    for (const auto &t : a.terms()) {
        out.push_back({t.mono, t.ydeg, t.coeff * Rational(t.mono.weight())});
    }
    return WSeries::from_terms(a.wmax(), a.qmax(), std::move(out));
}

WSeries coeff(const WSeries &a, int k, int q)
{
    if (k < 0 || k > a.wmax() || q < 0 || q > a.qmax()) {
        std::ostringstream os;
        os << "coeff: (weight " << k << ", y^" << q << ") outside truncation (" << a.wmax()
           << ", " << a.qmax() << ")";
        throw out_of_range(os.str());
    }
    std::vector<WSeries::Term> out;
    for (const auto &t : a.terms()) {
        if (t.mono.weight() == k && t.ydeg == q) {
            out.push_back({t.mono, 0, t.coeff});
        }
    }
    return WSeries::from_terms(k, 0, std::move(out));
}

WSeries weight_part(const WSeries &a, int k)
{
    std::vector<WSeries::Term> out;
    for (const auto &t : a.terms()) {
        if (t.mono.weight() == k) {
            out.push_back(t);
        }
    }
    return WSeries::from_terms(a.wmax(), a.qmax(), std::move(out));
}

WSeries y_part(const WSeries &a, int q)
{
    if (q < 0 || q > a.qmax()) {
        throw out_of_range("y_part: y^" + std::to_string(q) + " beyond qmax "
                           + std::to_string(a.qmax()));
    }
    std::vector<WSeries::Term> out;
    for (const auto &t : a.terms()) {
        if (t.ydeg == q) {
            out.push_back({t.mono, 0, t.coeff});
        }
    }
    return WSeries::from_terms(a.wmax(), 0, std::move(out));
}

WSeries truncate(const WSeries &a, int wmax, int qmax)
{
    if (wmax > a.wmax() || qmax > a.qmax()) {
        std::ostringstream os;
        os << "truncate: cannot raise orders (" << a.wmax() << ", " << a.qmax() << ") to ("
           << wmax << ", " << qmax << ")";
        throw truncation_deficit(os.str());
    }
    std::vector<WSeries::Term> out(a.terms().begin(), a.terms().end());
    return WSeries::from_terms(wmax, qmax, std::move(out));
}

namespace
{

std::string render_polynomial(const std::vector<const WSeries::Term *> &terms)
{
    std::ostringstream os;
    bool first = true;
    for (const auto *t : terms) {
        const Rational mag = t->coeff.sign() < 0 ? -t->coeff : t->coeff;
        if (first) {
            if (t->coeff.sign() < 0) {
                os << '-';
            }
        } else {
            os << (t->coeff.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (t->mono.is_one()) {
            os << mag;
        } else if (mag.is_one()) {
            os << t->mono.to_string();
        } else {
            os << mag << '*' << t->mono.to_string();
        }
    }
    return os.str();
}

} // namespace

std::string to_string(const WSeries &a)
{
    if (a.is_zero()) {
        return "0";
    }
    std::map<int, std::vector<const WSeries::Term *>> by_y;
    for (const auto &t : a.terms()) {
        by_y[t.ydeg].push_back(&t);
    }
    if (by_y.size() == 1 && by_y.begin()->first == 0) {
        return render_polynomial(by_y.begin()->second);
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[q, terms] : by_y) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << '(' << render_polynomial(terms) << ')';
        if (q == 1) {
            os << "*y";
        } else if (q > 1) {
            os << "*y^" << q;
        }
    }
    return os.str();
}

} // namespace hirzebruch
