#include <hirzebruch/char_classes.hpp>
#include <hirzebruch/errors.hpp>

namespace hirzebruch
{

namespace
{

// Coefficients of lambda/(1 - e^{-lambda}) obtained by inverting
// (1 - e^{-lambda})/lambda = sum_k (-1)^k lambda^k / (k+1)!.
std::vector<Rational> todd_coefficients(int wmax)
{
    std::vector<WSeries::Term> terms;
    for (int k = 0; k <= wmax; ++k) {
        terms.push_back({Monomial(Var::L(), k), 0, Rational(k % 2 == 0 ? 1 : -1) / factorial(k + 1)});
    }
    const WSeries inv = inverse(WSeries::from_terms(wmax, 0, std::move(terms)));
    std::vector<Rational> out;
    for (int k = 0; k <= wmax; ++k) {
        out.push_back(inv.coefficient(Monomial(Var::L(), k), 0));
    }
    return out;
}

// Truncated power series in t: [t^k] for k <= n.
using TSeries = std::vector<Rational>;

TSeries tmul(const TSeries &a, const TSeries &b)
{
    TSeries out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; i + j < a.size(); ++j) {
            out[i + j].add_product(a[i], b[j]);
        }
    }
    return out;
}

} // namespace

WSeries RootForm::to_series(int wmax, int qmax) const
{
    return WSeries::monomial(Rational(a), Monomial(Var::H()), 0, wmax, qmax)
           + WSeries::monomial(Rational(b), Monomial(Var::L()), 0, wmax, qmax);
}

YFrac::YFrac(UniPoly num, int dpow) : m_num(std::move(num)), m_dpow(dpow)
{
    if (dpow < 0) {
        throw domain_error("YFrac: negative denominator power");
    }
    if (m_num.is_zero()) {
        m_dpow = 0;
        return;
    }
    const UniPoly d = one_plus_y();
    while (m_dpow > 0) {
        auto [q, r] = divmod(m_num, d);
        if (!r.is_zero()) {
            break;
        }
        m_num = std::move(q);
        --m_dpow;
    }
}

UniPoly YFrac::absorbed(int k) const
{
    if (m_dpow > k) {
        throw domain_error("YFrac: denominator (1+y)^" + std::to_string(m_dpow)
                           + " cannot be absorbed at t-order " + std::to_string(k));
    }
    return m_num * pow(one_plus_y(), static_cast<unsigned>(k - m_dpow));
}

UniPoly YFrac::expanded(int qmax) const
{
    // (1+y)^{-d} = sum_j (-1)^j C(d+j-1, j) y^j
    std::vector<Rational> inv(static_cast<std::size_t>(qmax) + 1);
    for (int j = 0; j <= qmax; ++j) {
        inv[static_cast<std::size_t>(j)] =
            m_dpow == 0 ? Rational(j == 0 ? 1 : 0)
                        : Rational(j % 2 == 0 ? 1 : -1) * binomial(m_dpow + j - 1, j);
    }
    return (m_num * UniPoly(std::move(inv))).truncated(qmax);
}

Rational YFrac::evaluate(const Rational &y) const
{
    return m_num.evaluate(y) / pow(Rational(1) + y, static_cast<unsigned>(m_dpow));
}

UniPoly one_plus_y()
{
    return UniPoly{Rational(1), Rational(1)};
}

WSeries todd_factor(RootForm r, int wmax, int qmax)
{
    const auto coeffs = todd_coefficients(wmax);
    const WSeries lambda = r.to_series(wmax, qmax);
    WSeries s = WSeries::constant(coeffs.back(), wmax, qmax);
    for (int k = wmax - 1; k >= 0; --k) {
        s = WSeries::constant(coeffs[static_cast<std::size_t>(k)], wmax, qmax) + lambda * s;
    }
    return s;
}

WSeries chext_factor(RootForm r, int sign, int wmax, int qmax)
{
    if (sign != 1 && sign != -1) {
        throw domain_error("chext_factor: sign must be +1 or -1");
    }
    const WSeries lambda = Rational(sign) * r.to_series(wmax, qmax);
    return WSeries::one(wmax, qmax) + WSeries::y(wmax, qmax) * exp(lambda);
}

WSeries formal_chern_polynomial(int wmax, int qmax)
{
    std::vector<WSeries::Term> terms{{Monomial{}, 0, Rational(1)}};
    for (int i = 1; i <= wmax; ++i) {
        terms.push_back({Monomial(Var::chern(i)), 0, Rational(i % 2 == 0 ? 1 : -1)});
    }
    return WSeries::from_terms(wmax, qmax, std::move(terms));
}

WSeries log_derivative_series(const WSeries &c)
{
    if (!(c.weight_zero_part() == UniPoly::constant(Rational(1)))) {
        throw domain_error("log_derivative_series: weight-0 part must be 1");
    }
    return -(weight_scale(c) * inverse(c));
}

std::vector<WSeries> power_sums(const WSeries &c)
{
    const WSeries s = log_derivative_series(c);
    std::vector<WSeries> out;
    out.reserve(static_cast<std::size_t>(c.wmax()) + 1);
    out.emplace_back(c.wmax(), c.qmax());
    for (int k = 1; k <= c.wmax(); ++k) {
        out.push_back(weight_part(s, k));
    }
    return out;
}

std::vector<WSeries> power_sums_from_chern(int wmax, int qmax)
{
    if (wmax < 1) {
        throw domain_error("power_sums_from_chern: wmax must be >= 1");
    }
    return power_sums(formal_chern_polynomial(wmax, qmax));
}

std::vector<YFrac> f_coefficients(int kmax)
{
    if (kmax < 1) {
        throw domain_error("f_coefficients: kmax must be >= 1");
    }
    const auto n = static_cast<std::size_t>(kmax) + 1;

    // b_k: coefficients of ln(t / (1 - e^{-t})).
    std::vector<WSeries::Term> todd_terms;
    const auto todd = todd_coefficients(kmax);
    for (int k = 0; k <= kmax; ++k) {
        todd_terms.push_back({Monomial(Var::L(), k), 0, todd[static_cast<std::size_t>(k)]});
    }
    const WSeries log_todd = log(WSeries::from_terms(kmax, 0, std::move(todd_terms)));

    // e^{-t} - 1
    TSeries base(n);
    for (std::size_t j = 1; j < n; ++j) {
        base[j] = Rational(j % 2 == 0 ? 1 : -1) / factorial(static_cast<unsigned>(j));
    }

    // ln(1 + y e^{-t}) - ln(1+y) = ln(1 + w (e^{-t} - 1)) with w = y/(1+y)
    //   = sum_m (-1)^{m+1} w^m (e^{-t} - 1)^m / m.
    // Over the common denominator (1+y)^k, w^m contributes y^m (1+y)^{k-m}.
    std::vector<UniPoly> nums(n);
    TSeries power(n);
    power[0] = Rational(1);
    for (int m = 1; m <= kmax; ++m) {
        power = tmul(power, base);
        const Rational sign_over_m = Rational(m % 2 == 1 ? 1 : -1, m);
        for (int k = m; k <= kmax; ++k) {
            const Rational c = sign_over_m * power[static_cast<std::size_t>(k)];
            if (c.is_zero()) {
                continue;
            }
            nums[static_cast<std::size_t>(k)] +=
                c * (UniPoly::monomial(Rational(1), m) * pow(one_plus_y(), static_cast<unsigned>(k - m)));
        }
    }

    std::vector<YFrac> out;
    out.reserve(n);
    out.emplace_back();
    for (int k = 1; k <= kmax; ++k) {
        const Rational b = log_todd.coefficient(Monomial(Var::L(), k), 0);
        UniPoly num = nums[static_cast<std::size_t>(k)] + b * pow(one_plus_y(), static_cast<unsigned>(k));
        out.emplace_back(std::move(num), k);
    }
    return out;
}

WSeries hadamard_apply(std::span<const YFrac> coeffs, const WSeries &s, bool absorb)
{
    const int top = s.is_zero() ? 0 : s.terms().back().mono.weight();
    if (!s.is_zero() && static_cast<int>(coeffs.size()) <= top) {
        throw missing_coefficients("hadamard_apply: need coefficients up to t^" + std::to_string(top)
                                   + ", have " + std::to_string(static_cast<int>(coeffs.size()) - 1));
    }
    std::vector<UniPoly> scaled(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= top; ++k) {
        scaled[k] = absorb ? coeffs[k].absorbed(static_cast<int>(k)) : coeffs[k].expanded(s.qmax());
    }
    std::vector<WSeries::Term> out;
    for (const auto &t : s.terms()) {
        const UniPoly &a = scaled[static_cast<std::size_t>(t.mono.weight())];
        for (int j = 0; j <= a.degree(); ++j) {
            if (t.ydeg + j > s.qmax()) {
                break;
            }
            const Rational c = a.coeff(j);
            if (!c.is_zero()) {
                out.push_back({t.mono, t.ydeg + j, c * t.coeff});
            }
        }
    }
    return WSeries::from_terms(s.wmax(), s.qmax(), std::move(out));
}

WSeries base_hirzebruch(int d, int qmax, bool top_only)
{
    if (d < 0) {
        throw domain_error("base_hirzebruch: negative dimension");
    }
    if (d == 0) {
        return WSeries::one(0, qmax);
    }
    const WSeries s = log_derivative_series(formal_chern_polynomial(d, qmax));
    const auto f = f_coefficients(d);
    if (top_only) {
        return weight_part(exp(hadamard_apply(f, s, true)), d);
    }
    const WSeries factor = WSeries::y_polynomial(pow(one_plus_y(), static_cast<unsigned>(d)), d, qmax);
    return factor * exp(hadamard_apply(f, s, false));
}

} // namespace hirzebruch
