#include <hirzebruch/errors.hpp>
#include <hirzebruch/pushforward.hpp>

#include <algorithm>
#include <sstream>

namespace hirzebruch
{

std::vector<WSeries> segre_series(const BundleSpec &bundle, int wmax)
{
    if (wmax < 0) {
        throw domain_error("segre_series: negative wmax");
    }
    WSeries c = WSeries::one(wmax, 0);
    for (const int m : bundle.exps) {
        c = c * (WSeries::one(wmax, 0) + WSeries::monomial(Rational(m), Monomial(Var::L()), 0, wmax, 0));
    }
    const WSeries s = inverse(c);
    std::vector<WSeries> out;
    for (int k = 0; k <= wmax; ++k) {
        out.push_back(weight_part(s, k));
    }
    return out;
}

WSeries pushforward(const WSeries &d, const BundleSpec &bundle, int target_wmax)
{
    const int r = bundle.rank();
    if (r < 1) {
        throw invalid_spec("pushforward: bundle must have rank >= 1");
    }
    if (target_wmax < 0 || d.wmax() < target_wmax + r - 1) {
        std::ostringstream os;
        os << "pushforward: input truncated at weight " << d.wmax() << " but output weight "
           << target_wmax << " along a rank-" << r << " bundle needs weight " << target_wmax + r - 1;
        throw truncation_deficit(os.str());
    }
    // s_j = sigma_j L^j
    std::vector<Rational> sigma;
    {
        const auto s = segre_series(bundle, target_wmax);
        for (int j = 0; j <= target_wmax; ++j) {
            sigma.push_back(s[static_cast<std::size_t>(j)].coefficient(Monomial(Var::L(), j), 0));
        }
    }
    std::vector<WSeries::Term> out;
    for (const auto &t : d.terms()) {
        const int i = t.mono.exponent(Var::H());
        const int j = i - (r - 1);
        if (j < 0) {
            continue;
        }
        const Monomial rest = t.mono.with_exponent(Var::H(), 0);
        if (rest.weight() + j > target_wmax) {
            continue;
        }
        const Rational &s = sigma[static_cast<std::size_t>(j)];
        if (s.is_zero()) {
            continue;
        }
        const Monomial m = rest.with_exponent(Var::L(), rest.exponent(Var::L()) + j);
        out.push_back({m, t.ydeg, t.coeff * s});
    }
    return WSeries::from_terms(target_wmax, d.qmax(), std::move(out));
}

WSeries pushforward(const WSeries &d, const BundleSpec &bundle)
{
    return pushforward(d, bundle, d.wmax() - (bundle.rank() - 1));
}

WSeries derivative_pushforward_d5(const WSeries &d, const BundleSpec &bundle)
{
    auto sorted = bundle.exps;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::vector<int>{0, 1, 1, 1}) {
        throw unsupported_oracle("derivative_pushforward_d5: only the bundle O + L + L + L is supported");
    }
    const int target = d.wmax() - 3;
    if (target < 0) {
        throw truncation_deficit("derivative_pushforward_d5: input must reach weight >= 3");
    }
    // Strip a0 + a1 H + a2 H^2 and divide by H.
    std::vector<WSeries::Term> shifted;
    for (const auto &t : d.terms()) {
        const int i = t.mono.exponent(Var::H());
        if (i < 3) {
            continue;
        }
        shifted.push_back({t.mono.with_exponent(Var::H(), i - 1), t.ydeg, t.coeff});
    }
    const WSeries q = WSeries::from_terms(d.wmax() - 1, d.qmax(), std::move(shifted));
    const WSeries second = Rational(1, 2) * diff_H(diff_H(q));
    const WSeries lowered = truncate(second, target, d.qmax());
    const WSeries minus_l = -WSeries::variable(Var::L(), target, d.qmax());
    return substitute(lowered, Var::H(), minus_l);
}

} // namespace hirzebruch
