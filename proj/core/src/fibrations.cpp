#include <hirzebruch/errors.hpp>
#include <hirzebruch/fibrations.hpp>

#include <algorithm>
#include <array>
#include <sstream>

namespace hirzebruch
{

namespace
{

constexpr std::array<Family, 4> families{Family::D5, Family::E6, Family::E7, Family::E8};

// Polynomials in U with a y-direction truncated at qmax.
class UYSeries
{
public:
    UYSeries(int qmax, std::vector<UniPoly> coeffs) : m_coeffs(std::move(coeffs))
    {
        m_coeffs.resize(static_cast<std::size_t>(qmax) + 1);
    }
    static UYSeries constant(const UniPoly &p, int qmax)
    {
        return UYSeries(qmax, {p});
    }

    int qmax() const
    {
        return static_cast<int>(m_coeffs.size()) - 1;
    }
    const UniPoly &operator[](int q) const
    {
        return m_coeffs[static_cast<std::size_t>(q)];
    }

    friend UYSeries operator+(UYSeries a, const UYSeries &b)
    {
        for (int q = 0; q <= a.qmax(); ++q) {
            a.m_coeffs[static_cast<std::size_t>(q)] += b[q];
        }
        return a;
    }
    friend UYSeries operator-(UYSeries a, const UYSeries &b)
    {
        for (int q = 0; q <= a.qmax(); ++q) {
            a.m_coeffs[static_cast<std::size_t>(q)] -= b[q];
        }
        return a;
    }
    friend UYSeries operator*(const Rational &c, UYSeries a)
    {
        for (auto &p : a.m_coeffs) {
            p *= c;
        }
        return a;
    }
    friend UYSeries operator*(const UYSeries &a, const UYSeries &b)
    {
        std::vector<UniPoly> out(a.m_coeffs.size());
        for (int i = 0; i <= a.qmax(); ++i) {
            for (int j = 0; i + j <= a.qmax(); ++j) {
                out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
            }
        }
        return UYSeries(a.qmax(), std::move(out));
    }
    friend UYSeries inverse(const UYSeries &a)
    {
        if (a[0].degree() != 0) {
            throw not_a_unit("UYSeries inverse: y^0 coefficient must be a nonzero constant");
        }
        const Rational c0 = a[0].coeff(0);
        std::vector<UniPoly> b(a.m_coeffs.size());
        b[0] = UniPoly::constant(Rational(1) / c0);
        for (int k = 1; k <= a.qmax(); ++k) {
            UniPoly s;
            for (int j = 1; j <= k; ++j) {
                s += a[j] * b[static_cast<std::size_t>(k - j)];
            }
            b[static_cast<std::size_t>(k)] = (Rational(-1) / c0) * s;
        }
        return UYSeries(a.qmax(), std::move(b));
    }

private:
    std::vector<UniPoly> m_coeffs;
};

// Q as a rational expression in U and y; one generic evaluation serves both
// the U = e^{-L} expansion and the exact polynomials P_n(U).
template <class Ring>
Ring closed_q_expression(Family f, const Ring &one, const Ring &u, const Ring &y)
{
    const Ring yp1 = y + one;
    auto k = [&](long c) { return Rational(c) * one; };
    auto upow = [&](int e) {
        Ring r = one;
        for (int i = 0; i < e; ++i) {
            r = r * u;
        }
        return r;
    };
    switch (f) {
        case Family::D5: {
            const Ring den = inverse(y * upow(2) + one);
            return k(4) - y + yp1 * (y * u - k(3)) * den - u * yp1 * yp1 * den * den;
        }
        case Family::E6:
            return k(3) - y + yp1 * (y * upow(2) - u - k(2)) * inverse(y * upow(3) + one);
        case Family::E7:
            return k(2) - y + yp1 * (y * upow(3) - u - k(1)) * inverse(y * upow(4) + one);
        case Family::E8:
            return k(1) - y + yp1 * (y * upow(5) - u) * inverse(y * upow(6) + one);
    }
    throw domain_error("unknown family");
}

UniPoly upoly_from_ints(std::initializer_list<long> ascending)
{
    std::vector<Rational> c;
    for (const long v : ascending) {
        c.emplace_back(v);
    }
    return UniPoly(std::move(c));
}

std::string power_suffix(int e)
{
    if (e == 0) {
        return "";
    }
    if (e == 1) {
        return "";
    }
    return "^" + std::to_string(e);
}

} // namespace

std::span<const Family> all_families()
{
    return families;
}

std::string family_name(Family f)
{
    switch (f) {
        case Family::D5:
            return "D5";
        case Family::E6:
            return "E6";
        case Family::E7:
            return "E7";
        case Family::E8:
            return "E8";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name)
{
    for (const Family f : families) {
        if (family_name(f) == name) {
            return f;
        }
    }
    return std::nullopt;
}

std::vector<RootForm> default_f_roots(const BundleSpec &bundle)
{
    std::vector<RootForm> out;
    for (const int m : bundle.exps) {
        out.push_back({1, m});
    }
    return out;
}

FibrationSpec catalog_spec(Family f)
{
    FibrationSpec s;
    s.name = family_name(f);
    s.closed_q = f;
    switch (f) {
        case Family::D5:
            s.bundle = {{0, 1, 1, 1}};
            s.n_roots = {{2, 2}, {2, 2}};
            break;
        case Family::E6:
            s.bundle = {{0, 1, 1}};
            s.n_roots = {{3, 3}};
            break;
        case Family::E7:
            // Quadric-cone model of P_{1,1,2}(O + L + L^2) inside the
            // P^3-bundle of O + L + L^2 + L^2, cut by the degree-4 equation.
            s.bundle = {{0, 1, 2, 2}};
            s.n_roots = {{2, 2}, {2, 4}};
            break;
        case Family::E8:
            s.bundle = {{0, 2, 3}};
            s.n_roots = {{3, 6}};
            break;
    }
    s.f_roots = default_f_roots(s.bundle);
    return s;
}

std::vector<FibrationSpec> catalog()
{
    std::vector<FibrationSpec> out;
    for (const Family f : families) {
        out.push_back(catalog_spec(f));
    }
    return out;
}

void validate(const FibrationSpec &spec, bool catalog_entry)
{
    auto fail = [&](const std::string &what) { throw invalid_spec("fibration '" + spec.name + "': " + what); };
    if (spec.bundle.rank() < (catalog_entry ? 2 : 1)) {
        fail(catalog_entry ? "bundle rank must be >= 2" : "bundle rank must be >= 1");
    }
    auto sorted = [](std::vector<RootForm> r) {
        std::sort(r.begin(), r.end(), [](const RootForm &x, const RootForm &y) {
            return std::tie(x.a, x.b) < std::tie(y.a, y.b);
        });
        return r;
    };
    if (sorted(spec.f_roots) != sorted(default_f_roots(spec.bundle))) {
        fail("f_roots must be {H + m L : m in bundle}");
    }
    for (const auto &r : spec.n_roots) {
        if (r.a <= 0) {
            fail("every normal root needs a positive H coefficient");
        }
    }
    if (catalog_entry) {
        if (spec.n_roots.empty()) {
            fail("at least one normal root is required");
        }
        if (spec.fiber_dimension() != 1) {
            fail("fiber dimension must be 1, got " + std::to_string(spec.fiber_dimension()));
        }
    } else if (spec.fiber_dimension() < 0) {
        fail("fiber dimension must be >= 0, got " + std::to_string(spec.fiber_dimension()));
    }
}

WSeries build_D(const FibrationSpec &spec, int wmax, int qmax)
{
    if (wmax < static_cast<int>(spec.n_roots.size())) {
        throw truncation_deficit("build_D: wmax " + std::to_string(wmax) + " is below the codimension "
                                 + std::to_string(spec.n_roots.size()));
    }
    WSeries numerator = WSeries::one(wmax, qmax);
    for (const auto &r : spec.f_roots) {
        numerator = numerator * chext_factor(r, -1, wmax, qmax) * todd_factor(r, wmax, qmax);
    }
    WSeries denominator = WSeries::y_polynomial(one_plus_y(), wmax, qmax);
    for (const auto &r : spec.n_roots) {
        const WSeries mu = r.to_series(wmax, qmax);
        numerator = numerator * (WSeries::one(wmax, qmax) - exp(-mu));
        denominator = denominator * chext_factor(r, -1, wmax, qmax);
    }
    return numerator * inverse(denominator);
}

WSeries derived_Q(const FibrationSpec &spec, int wmax, int qmax)
{
    const int r = spec.bundle.rank();
    return pushforward(build_D(spec, wmax + r - 1, qmax), spec.bundle, wmax);
}

WSeries closed_form_Q(Family f, int wmax, int qmax)
{
    const WSeries one = WSeries::one(wmax, qmax);
    const WSeries u = exp(-WSeries::variable(Var::L(), wmax, qmax));
    return closed_q_expression(f, one, u, WSeries::y(wmax, qmax));
}

std::string closed_form_string(Family f)
{
    switch (f) {
        case Family::D5:
            return "4 - y + (y+1)(yU - 3)/(yU^2 + 1) - U(y+1)^2/(yU^2 + 1)^2";
        case Family::E6:
            return "3 - y + (y+1)(yU^2 - U - 2)/(yU^3 + 1)";
        case Family::E7:
            return "2 - y + (y+1)(yU^3 - U - 1)/(yU^4 + 1)";
        case Family::E8:
            return "1 - y + (y+1)(yU^5 - U - 0)/(yU^6 + 1)";
    }
    return {};
}

WSeries q_series(const FibrationSpec &spec, int wmax, int qmax)
{
    if (spec.closed_q) {
        return closed_form_Q(*spec.closed_q, wmax, qmax);
    }
    return derived_Q(spec, wmax, qmax);
}

UniPoly p_polynomial(Family f, int n)
{
    if (n < 0) {
        throw out_of_range("p_polynomial: negative index");
    }
    const UYSeries one = UYSeries::constant(UniPoly::constant(Rational(1)), n);
    const UYSeries u = UYSeries::constant(UniPoly::monomial(Rational(1), 1), n);
    const UYSeries y(n, {UniPoly{}, UniPoly::constant(Rational(1))});
    return closed_q_expression(f, one, u, y)[n];
}

UniPoly p_table(Family f, int n)
{
    if (n < 0) {
        throw out_of_range("p_table: negative index");
    }
    const UniPoly u = UniPoly::monomial(Rational(1), 1);
    const UniPoly one = UniPoly::constant(Rational(1));
    if (n == 0) {
        return one - u;
    }
    if (n == 1) {
        switch (f) {
            case Family::D5:
                return upoly_from_ints({-4, -1, 3, 2});
            case Family::E6:
                return upoly_from_ints({-3, -1, 1, 2, 1});
            case Family::E7:
                return upoly_from_ints({-2, -1, 0, 1, 1, 1});
            case Family::E8:
                return upoly_from_ints({-1, -1, 0, 0, 0, 1, 0, 1});
        }
    }
    const auto tail = [&](int k) { return pow(-UniPoly::monomial(Rational(1), k), static_cast<unsigned>(n - 2)); };
    const auto um = [&](int k) { return UniPoly::monomial(Rational(1), k); };
    switch (f) {
        case Family::D5: {
            const UniPoly linear = upoly_from_ints({-(n - 2), n + 1});
            return -(u * linear * (u - one) * pow(u + one, 2) * tail(2));
        }
        case Family::E6:
            return -(um(2) * (um(3) - one) * pow(u + one, 2) * tail(3));
        case Family::E7:
            return -(um(3) * (um(4) - one) * (um(2) + u + one) * tail(4));
        case Family::E8:
            return -(um(5) * (um(6) - one) * (um(2) + one) * tail(6));
    }
    throw domain_error("unknown family");
}

std::string p_table_string(Family f, int n)
{
    if (n < 0) {
        throw out_of_range("p_table_string: negative index");
    }
    if (n <= 1) {
        return p_table(f, n).to_string("U");
    }
    std::ostringstream os;
    switch (f) {
        case Family::D5: {
            os << "-U(" << n + 1 << "U";
            if (n - 2 != 0) {
                os << '-' << n - 2;
            }
            os << ")(U-1)(U+1)^2";
            break;
        }
        case Family::E6:
            os << "-U^2(U^3-1)(U+1)^2";
            break;
        case Family::E7:
            os << "-U^3(U^4-1)(U^2+U+1)";
            break;
        case Family::E8:
            os << "-U^5(U^6-1)(U^2+1)";
            break;
    }
    const int k = f == Family::D5 ? 2 : (f == Family::E6 ? 3 : (f == Family::E7 ? 4 : 6));
    if (n > 2) {
        os << "(-U^" << k << ')' << power_suffix(n - 2);
    }
    return os.str();
}

WSeries u_polynomial_at_exp(const UniPoly &p, int wmax)
{
    const WSeries u = exp(-WSeries::variable(Var::L(), wmax, 0));
    WSeries s(wmax, 0);
    for (int k = p.degree(); k >= 0; --k) {
        s = s * u + WSeries::constant(p.coeff(k), wmax, 0);
    }
    return s;
}

WSeries pushforward_class(const FibrationSpec &spec, int q, int d)
{
    if (q < 0 || q > d + 1) {
        throw out_of_range("pushforward_class: q = " + std::to_string(q) + " outside [0, " + std::to_string(d + 1)
                           + "]");
    }
    const WSeries base = base_hirzebruch(d, q, false);
    if (!spec.closed_q) {
        return y_part(derived_Q(spec, d, q) * base, q);
    }
    WSeries out(d, 0);
    for (int i = 0; i <= q; ++i) {
        out = out + u_polynomial_at_exp(p_polynomial(*spec.closed_q, q - i), d) * y_part(base, i);
    }
    return out;
}

} // namespace hirzebruch
