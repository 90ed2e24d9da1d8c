#include <hirzebruch/errors.hpp>
#include <hirzebruch/genseries.hpp>

#include <sstream>

namespace hirzebruch
{

BaseSpec BaseSpec::symbolic(int d)
{
    if (d < 0) {
        throw invalid_spec("base dimension must be >= 0");
    }
    return BaseSpec{d, std::nullopt};
}

BaseSpec BaseSpec::projective_space(int d, int n)
{
    if (d < 0 || d > Var::max_chern) {
        throw invalid_spec("projective space dimension out of range");
    }
    std::map<Monomial, Rational> table;
    for (const auto &m : base_monomials_of_weight(d, d)) {
        Rational v = pow(Rational(n), static_cast<unsigned>(m.exponent(Var::L())));
        for (int i = 1; i <= d; ++i) {
            v *= pow(binomial(d + 1, i), static_cast<unsigned>(m.exponent(Var::chern(i))));
        }
        table.emplace(m, std::move(v));
    }
    return BaseSpec{d, std::move(table)};
}

BaseSpec BaseSpec::from_table(int d, std::map<Monomial, Rational> table)
{
    if (d < 0) {
        throw invalid_spec("base dimension must be >= 0");
    }
    for (const auto &[m, v] : table) {
        if (m.weight() != d) {
            throw invalid_spec("base table entry " + m.to_string() + " has weight " + std::to_string(m.weight())
                               + ", expected " + std::to_string(d));
        }
        if (m.exponent(Var::H()) != 0) {
            throw invalid_spec("base table entry " + m.to_string() + " involves H");
        }
    }
    return BaseSpec{d, std::move(table)};
}

WSeries chi_series(const FibrationSpec &spec, int tmax, int qmax)
{
    if (tmax < 0) {
        throw domain_error("chi_series: negative tmax");
    }
    const WSeries q = reweight_by_one_plus_y(q_series(spec, tmax, qmax));
    if (tmax == 0) {
        return q;
    }
    const WSeries s = log_derivative_series(formal_chern_polynomial(tmax, qmax));
    return q * exp(hadamard_apply(f_coefficients(tmax), s, true));
}

Rational integrate(const WSeries &cls, const BaseSpec &base)
{
    if (base.is_symbolic()) {
        throw domain_error("integrate: base of dimension " + std::to_string(base.dim)
                           + " is symbolic and has no intersection numbers");
    }
    Rational total;
    for (const auto &t : cls.terms()) {
        if (t.ydeg != 0) {
            throw domain_error("integrate: class must be y-free");
        }
        if (t.mono.weight() != base.dim) {
            throw domain_error("integrate: class is not homogeneous of weight " + std::to_string(base.dim)
                               + " (term " + t.mono.to_string() + ")");
        }
        const auto it = base.table->find(t.mono);
        if (it == base.table->end()) {
            throw missing_intersection("integrate: no intersection number for " + t.mono.to_string());
        }
        total.add_product(t.coeff, it->second);
    }
    return total;
}

WSeries chi_class(const FibrationSpec &spec, int d, int q)
{
    if (d < 0 || q < 0 || q > d + 1) {
        throw out_of_range("chi_class: q = " + std::to_string(q) + " exceeds dim Y = " + std::to_string(d + 1));
    }
    return coeff(chi_series(spec, d, d + 1), d, q);
}

std::vector<Rational> chi_all(const FibrationSpec &spec, const BaseSpec &base, bool verify)
{
    const int d = base.dim;
    const WSeries chi = chi_series(spec, d, d + 1);
    std::vector<Rational> out;
    for (int q = 0; q <= d + 1; ++q) {
        const Rational value = integrate(coeff(chi, d, q), base);
        if (verify) {
            const Rational other = integrate(coeff(pushforward_class(spec, q, d), d, 0), base);
            if (other != value) {
                std::ostringstream os;
                os << "chi_" << q << " of " << spec.name << ": generating series gives " << value
                   << ", sum of P_i H_j gives " << other;
                throw verification_failure(os.str());
            }
        }
        out.push_back(value);
    }
    return out;
}

Rational chi_q(const FibrationSpec &spec, const BaseSpec &base, int q, bool verify)
{
    if (q < 0 || q > base.dim + 1) {
        throw out_of_range("chi_q: q = " + std::to_string(q) + " exceeds dim Y = " + std::to_string(base.dim + 1));
    }
    const Rational value = integrate(chi_class(spec, base.dim, q), base);
    if (verify) {
        const Rational other = integrate(coeff(pushforward_class(spec, q, base.dim), base.dim, 0), base);
        if (other != value) {
            std::ostringstream os;
            os << "chi_" << q << " of " << spec.name << ": generating series gives " << value
               << ", sum of P_i H_j gives " << other;
            throw verification_failure(os.str());
        }
    }
    return value;
}

WSeries euler_series_e8(int dmax)
{
    if (dmax < 1) {
        throw domain_error("euler_series_e8: dmax must be >= 1");
    }
    const WSeries l = WSeries::variable(Var::L(), dmax, 0);
    const WSeries one = WSeries::one(dmax, 0);
    WSeries c = one;
    for (int i = 1; i <= dmax; ++i) {
        c = c + WSeries::variable(Var::chern(i), dmax, 0);
    }
    return Rational(12) * l * inverse(one + Rational(6) * l) * c;
}

} // namespace hirzebruch
