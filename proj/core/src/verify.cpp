#include <hirzebruch/char_classes.hpp>
#include <hirzebruch/errors.hpp>
#include <hirzebruch/genseries.hpp>
#include <hirzebruch/pushforward.hpp>
#include <hirzebruch/verify.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace hirzebruch::verify
{

namespace
{

// Records the first failure only; later checks still count.
struct Recorder {
    SuiteResult result;

    explicit Recorder(std::string name)
    {
        result.name = std::move(name);
    }
    void check(bool ok, const std::function<std::string()> &describe)
    {
        ++result.checks;
        if (!ok && result.passed) {
            result.passed = false;
            result.detail = describe();
        }
    }
    void check_equal(const WSeries &a, const WSeries &b, const std::string &context)
    {
        auto mismatch = first_mismatch(a, b);
        check(!mismatch, [&] { return context + ": " + *mismatch; });
    }
};

int class_dim_limit(const Options &opt)
{
    return std::max(0, std::min(opt.max_base_dim, opt.wmax));
}

std::vector<BaseSpec> sample_bases(const Options &opt)
{
    std::vector<BaseSpec> out;
    for (int d = 1; d <= std::min(3, class_dim_limit(opt)); ++d) {
        std::vector<int> ls{1, 2, d + 1};
        std::sort(ls.begin(), ls.end());
        ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
        for (const int n : ls) {
            out.push_back(BaseSpec::projective_space(d, n));
        }
    }
    return out;
}

std::string base_label(const BaseSpec &b)
{
    // projective_space stores L^d -> n^d
    const Rational top = b.table->at(Monomial(Var::L(), b.dim));
    int n = 1;
    while (pow(Rational(n), static_cast<unsigned>(b.dim)) != top && n < 64) {
        ++n;
    }
    return "P^" + std::to_string(b.dim) + " with L = O(" + std::to_string(n) + ")";
}

} // namespace

bool Report::passed() const
{
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult &s) { return s.passed; });
}

std::optional<std::string> first_mismatch(const WSeries &a, const WSeries &b)
{
    if (a.wmax() != b.wmax() || a.qmax() != b.qmax()) {
        std::ostringstream os;
        os << "truncation orders differ: (" << a.wmax() << ", " << a.qmax() << ") vs (" << b.wmax() << ", "
           << b.qmax() << ")";
        return os.str();
    }
    const WSeries diff = a - b;
    if (diff.is_zero()) {
        return std::nullopt;
    }
    const auto &t = diff.terms().front();
    const int k = t.mono.weight();
    const int q = t.ydeg;
    std::ostringstream os;
    os << "first mismatch at (weight " << k << ", y^" << q << "): " << to_string(coeff(a, k, q)) << " vs "
       << to_string(coeff(b, k, q));
    return os.str();
}

SuiteResult q_identity(const Options &opt)
{
    Recorder rec("derived-vs-closed Q");
    for (const auto &spec : opt.specs) {
        if (!spec.closed_q) {
            rec.check(false, [&] { return spec.name + ": no closed form to compare against"; });
            continue;
        }
        const WSeries derived = derived_Q(spec, opt.wmax, opt.qmax);
        const WSeries closed = closed_form_Q(*spec.closed_q, opt.wmax, opt.qmax);
        rec.check_equal(derived, closed, spec.name + " derived Q vs closed form");
        // The fibre has chi_y = 0: Q vanishes at U = 1, i.e. L = 0.
        const WSeries zero(opt.wmax, opt.qmax);
        rec.check_equal(substitute(derived, Var::L(), zero), zero, spec.name + " Q at U = 1");
    }
    return rec.result;
}

SuiteResult p_table(const Options &opt)
{
    Recorder rec("P-table");
    const UniPoly u = UniPoly::monomial(Rational(1), 1);
    const UniPoly one = UniPoly::constant(Rational(1));
    const int nmax = 6;
    for (const auto &spec : opt.specs) {
        if (!spec.closed_q) {
            continue;
        }
        const Family f = *spec.closed_q;
        for (int n = 0; n <= nmax; ++n) {
            const UniPoly p = p_polynomial(f, n);
            const UniPoly table = hirzebruch::p_table(f, n);
            rec.check(p == table, [&] {
                return spec.name + " P" + std::to_string(n) + " = " + p.to_string("U") + ", table gives "
                       + table.to_string("U");
            });
            if (n < 2) {
                continue;
            }
            // Nonzero roots are roots of unity, except D5's extra root (n-2)/(n+1).
            UniPoly rest = p;
            if (f == Family::D5) {
                const Rational root(n - 2, n + 1);
                rec.check(p.evaluate(root).is_zero(), [&] {
                    return spec.name + " P" + std::to_string(n) + " does not vanish at " + root.to_string();
                });
                rest = divmod(rest, UniPoly{-root, Rational(1)}).first;
            }
            rest = divmod(rest, UniPoly::monomial(Rational(1), rest.valuation())).first;
            const UniPoly cyclotomic = pow(UniPoly::monomial(Rational(1), 12) - one, 2);
            rec.check(divides(rest, cyclotomic), [&] {
                return spec.name + " P" + std::to_string(n) + " has a nonzero root off the unit circle";
            });
        }
        rec.check(p_polynomial(f, 0) == one - u, [&] { return spec.name + " P0 != 1-U"; });
        const WSeries derived_p0 = y_part(derived_Q(spec, opt.wmax, opt.qmax), 0);
        rec.check_equal(derived_p0, u_polynomial_at_exp(one - u, opt.wmax), spec.name + " y^0 part of Q vs 1-U");
    }
    return rec.result;
}

WSeries random_h_series(std::uint64_t seed, int wmax, int qmax, int terms)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::uniform_int_distribution<int> ydeg(0, qmax);
    std::uniform_int_distribution<int> wdist(0, wmax);
    std::vector<WSeries::Term> out;
    for (int i = 0; i < terms; ++i) {
        const int w = wdist(rng);
        const int h = std::uniform_int_distribution<int>(0, w)(rng);
        out.push_back({Monomial{{Var::H(), h}, {Var::L(), w - h}}, ydeg(rng), Rational(num(rng), den(rng))});
    }
    return WSeries::from_terms(wmax, qmax, std::move(out));
}

SuiteResult d5_derivative_oracle(const Options &opt)
{
    Recorder rec("D5 derivative oracle");
    const FibrationSpec d5 = catalog_spec(Family::D5);
    const int w = opt.wmax + 3;
    const WSeries d = build_D(d5, w, opt.qmax);
    rec.check_equal(derivative_pushforward_d5(d, d5.bundle), pushforward(d, d5.bundle), "D5 integrand");
    for (int i = 0; i < opt.random_cases; ++i) {
        const WSeries r = random_h_series(opt.seed + static_cast<std::uint64_t>(i), w, std::min(opt.qmax, 3), 40);
        rec.check_equal(derivative_pushforward_d5(r, d5.bundle), pushforward(r, d5.bundle),
                        "random series #" + std::to_string(i));
    }
    return rec.result;
}

bool lemma_holds(const std::vector<int> &roots, int order, int qmax)
{
    // Left side: sum_i ln(g(l_i t) / (1+y)), with t carried by L.
    const WSeries inv_one_plus_y = inverse(WSeries::y_polynomial(one_plus_y(), order, qmax));
    WSeries lhs(order, qmax);
    WSeries c = WSeries::one(order, qmax);
    for (const int l : roots) {
        const RootForm r{0, l};
        const WSeries g = chext_factor(r, -1, order, qmax) * todd_factor(r, order, qmax);
        lhs = lhs + log(g * inv_one_plus_y);
        c = c * (WSeries::one(order, qmax) - r.to_series(order, qmax));
    }
    const WSeries rhs = hadamard_apply(f_coefficients(std::max(order, 1)), log_derivative_series(c), false);
    return lhs == rhs;
}

SuiteResult lemma_power_sums(const Options &opt)
{
    Recorder rec("Lemma power-sum identity");
    const int order = std::min(opt.wmax, 6);
    const int qmax = std::min(opt.qmax, 6);
    std::vector<int> tuple;
    // Multisets of size 1..4 from [-3, 3].
    std::function<void(int, int)> rec_tuples = [&](int start, int remaining) {
        if (remaining == 0) {
            rec.check(lemma_holds(tuple, order, qmax), [&] {
                std::ostringstream os;
                os << "identity fails for roots (";
                for (std::size_t i = 0; i < tuple.size(); ++i) {
                    os << (i ? ", " : "") << tuple[i];
                }
                os << ")";
                return os.str();
            });
            return;
        }
        for (int v = start; v <= 3; ++v) {
            tuple.push_back(v);
            rec_tuples(v, remaining - 1);
            tuple.pop_back();
        }
    };
    for (int d = 1; d <= 4; ++d) {
        rec_tuples(-3, d);
    }
    return rec.result;
}

SuiteResult euler_e8(const Options &opt)
{
    Recorder rec("E8 Euler cross-check");
    const auto it = std::find_if(opt.specs.begin(), opt.specs.end(),
                                 [](const FibrationSpec &s) { return s.closed_q == Family::E8; });
    if (it == opt.specs.end()) {
        return rec.result;
    }
    const int dmax = class_dim_limit(opt);
    if (dmax < 1) {
        return rec.result;
    }
    const WSeries chi = chi_series(*it, dmax, dmax + 1);
    const WSeries euler = euler_series_e8(dmax);
    for (int d = 1; d <= dmax; ++d) {
        WSeries alternating(d, 0);
        for (int q = 0; q <= d + 1; ++q) {
            alternating = alternating + Rational(q % 2 == 0 ? 1 : -1) * coeff(chi, d, q);
        }
        rec.check_equal(alternating, coeff(euler, d, 0), "E8 alternating sum at t^" + std::to_string(d));
    }
    return rec.result;
}

SuiteResult serre_duality(const Options &opt)
{
    Recorder rec("Serre duality");
    for (const auto &spec : opt.specs) {
        for (const auto &base : sample_bases(opt)) {
            const auto chi = chi_all(spec, base);
            const int n = base.dim + 1;
            const Rational sign(n % 2 == 0 ? 1 : -1);
            for (int q = 0; q <= n; ++q) {
                rec.check(chi[static_cast<std::size_t>(q)] == sign * chi[static_cast<std::size_t>(n - q)], [&] {
                    std::ostringstream os;
                    os << spec.name << " over " << base_label(base) << ": chi_" << q << " = "
                       << chi[static_cast<std::size_t>(q)] << " but chi_" << n - q << " = "
                       << chi[static_cast<std::size_t>(n - q)];
                    return os.str();
                });
            }
        }
    }
    return rec.result;
}

SuiteResult integrality(const Options &opt)
{
    Recorder rec("integrality");
    for (const auto &spec : opt.specs) {
        for (const auto &base : sample_bases(opt)) {
            const auto chi = chi_all(spec, base);
            for (std::size_t q = 0; q < chi.size(); ++q) {
                rec.check(chi[q].is_integer(), [&] {
                    std::ostringstream os;
                    os << spec.name << " over " << base_label(base) << ": chi_" << q << " = " << chi[q];
                    return os.str();
                });
            }
            // Anticanonical L: chi_0 = chi(O_B) - chi(K_B), so 0 or 2 by parity of dim B.
            if (base.table->at(Monomial(Var::L(), base.dim)) == pow(Rational(base.dim + 1), base.dim)) {
                const Rational expected(base.dim % 2 == 0 ? 0 : 2);
                rec.check(chi[0] == expected, [&] {
                    return spec.name + " over " + base_label(base) + ": chi_0 = " + chi[0].to_string();
                });
            }
        }
    }
    return rec.result;
}

SuiteResult route_consistency(const Options &opt)
{
    Recorder rec("route consistency");
    const int dmax = class_dim_limit(opt);
    for (const auto &spec : opt.specs) {
        const WSeries chi = chi_series(spec, dmax, dmax + 1);
        for (int d = 0; d <= dmax; ++d) {
            for (int q = 0; q <= d + 1; ++q) {
                rec.check_equal(coeff(chi, d, q), coeff(pushforward_class(spec, q, d), d, 0),
                                spec.name + " d=" + std::to_string(d) + " q=" + std::to_string(q));
            }
        }
    }
    return rec.result;
}

Report run_all(const Options &opt)
{
    Report r;
    r.suites.push_back(q_identity(opt));
    r.suites.push_back(p_table(opt));
    r.suites.push_back(d5_derivative_oracle(opt));
    r.suites.push_back(lemma_power_sums(opt));
    r.suites.push_back(euler_e8(opt));
    r.suites.push_back(serre_duality(opt));
    r.suites.push_back(integrality(opt));
    r.suites.push_back(route_consistency(opt));
    return r;
}

} // namespace hirzebruch::verify
