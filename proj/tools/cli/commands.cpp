#include "commands.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include <hirzebruch/errors.hpp>
#include <hirzebruch/fibrations.hpp>
#include <hirzebruch/genseries.hpp>
#include <hirzebruch/verify.hpp>

#include "format.hpp"
#include "spec_io.hpp"

namespace hirzebruch::cli
{

namespace
{

struct QArgs {
    std::string target;
    int wmax = 6;
    int qmax = 7;
    std::string format = "text";
    bool closed = false;
    bool derived = false;
};

struct PtableArgs {
    std::string family;
    int nmax = 6;
    bool check = false;
};

struct ChiArgs {
    std::string target;
    std::string base;
    std::string base_file;
    std::string q = "all";
    bool show_class = false;
    bool verify = false;
    std::string format = "text";
};

struct VerifyArgs {
    std::string family = "all";
    int wmax = 6;
    int qmax = 7;
    std::string spec_file;
    int random_cases = 50;
};

Family require_family(const std::string &name)
{
    const auto f = family_from_name(name);
    if (!f) {
        throw parse_error("unknown family '" + name + "' (expected D5, E6, E7 or E8)");
    }
    return *f;
}

std::string roots_string(const std::vector<RootForm> &roots)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        os << (i ? ", " : "") << '(' << roots[i].a << ',' << roots[i].b << ')';
    }
    return os.str();
}

int cmd_families(std::ostream &out)
{
    for (const auto &spec : catalog()) {
        out << spec.name << ": bundle (";
        for (std::size_t i = 0; i < spec.bundle.exps.size(); ++i) {
            out << (i ? "," : "") << spec.bundle.exps[i];
        }
        out << "), normal roots aH+bL: " << roots_string(spec.n_roots) << '\n';
        out << "  Q = " << closed_form_string(*spec.closed_q) << '\n';
    }
    return ok;
}

int cmd_q(const QArgs &a, std::ostream &out)
{
    const FibrationSpec spec = resolve_target(a.target);
    if (a.closed) {
        if (!spec.closed_q) {
            throw parse_error("--closed: '" + spec.name + "' has no closed form");
        }
        const std::string s = closed_form_string(*spec.closed_q);
        if (a.format == "json") {
            out << nlohmann::json{{"family", spec.name}, {"closed", s}}.dump(2) << '\n';
        } else {
            out << s << '\n';
        }
        return ok;
    }
    const WSeries q = a.derived ? derived_Q(spec, a.wmax, a.qmax) : q_series(spec, a.wmax, a.qmax);
    if (a.format == "json") {
        nlohmann::json j = series_to_json(q);
        j["family"] = spec.name;
        out << j.dump(2) << '\n';
    } else if (a.format == "latex") {
        out << series_to_latex(q) << '\n';
    } else {
        out << series_to_text(q) << '\n';
    }
    return ok;
}

int cmd_ptable(const PtableArgs &a, std::ostream &out)
{
    const Family f = require_family(a.family);
    bool all_ok = true;
    for (int n = 0; n <= a.nmax; ++n) {
        const UniPoly p = p_polynomial(f, n);
        out << 'P' << n << " = " << p.to_string("U");
        if (n >= 2) {
            out << "  [= " << p_table_string(f, n) << ']';
        }
        if (a.check) {
            const bool match = p == p_table(f, n);
            all_ok = all_ok && match;
            out << (match ? "  ok" : "  MISMATCH (table: " + p_table(f, n).to_string("U") + ")");
        }
        out << '\n';
    }
    if (a.check) {
        out << (all_ok ? "PASS" : "FAIL") << " (" << a.nmax + 1 << " entries checked)\n";
    }
    return all_ok ? ok : verification_failed;
}

int cmd_chi(const ChiArgs &a, std::ostream &out)
{
    const FibrationSpec spec = resolve_target(a.target);
    if (a.base.empty() == a.base_file.empty()) {
        throw parse_error("chi: exactly one of --base or --base-file is required");
    }
    const BaseSpec base = a.base.empty() ? parse_base(read_file(a.base_file), a.base_file) : parse_base_arg(a.base);
    const int dim_y = base.dim + 1;
    std::vector<int> qs;
    if (a.q == "all") {
        for (int q = 0; q <= dim_y; ++q) {
            qs.push_back(q);
        }
    } else {
        int q = 0;
        try {
            std::size_t used = 0;
            q = std::stoi(a.q, &used);
            if (used != a.q.size()) {
                throw std::invalid_argument(a.q);
            }
        } catch (const std::logic_error &) {
            throw parse_error("--q '" + a.q + "': expected an integer or 'all'");
        }
        if (q < 0 || q > dim_y) {
            throw parse_error("q = " + std::to_string(q) + " exceeds dim Y = " + std::to_string(dim_y));
        }
        qs.push_back(q);
    }

    nlohmann::json j = {{"family", spec.name}, {"base_dim", base.dim}};
    Rational alternating;
    for (const int q : qs) {
        const Rational v = chi_q(spec, base, q, a.verify);
        if (q % 2 == 0) {
            alternating += v;
        } else {
            alternating -= v;
        }
        if (a.format == "json") {
            nlohmann::json entry = {{"q", q}, {"value", v.to_fraction_string()}};
            if (a.show_class) {
                entry["class"] = series_to_json(chi_class(spec, base.dim, q));
            }
            j["chi"].push_back(entry);
            continue;
        }
        if (a.show_class) {
            out << "class[t^" << base.dim << " y^" << q << "] = " << to_string(chi_class(spec, base.dim, q)) << '\n';
        }
        out << "chi_" << q << " = " << v.to_string() << '\n';
    }
    if (qs.size() > 1) {
        if (a.format == "json") {
            j["alternating_sum"] = alternating.to_fraction_string();
        } else {
            out << "alternating sum = " << alternating.to_string() << '\n';
        }
    }
    if (a.format == "json") {
        out << j.dump(2) << '\n';
    }
    return ok;
}

int cmd_verify(const VerifyArgs &a, std::ostream &out)
{
    verify::Options opt;
    opt.wmax = a.wmax;
    opt.qmax = a.qmax;
    opt.random_cases = a.random_cases;
    if (a.family != "all") {
        opt.specs = {catalog_spec(require_family(a.family))};
    }
    if (!a.spec_file.empty()) {
        const FibrationSpec override_spec = parse_spec(read_file(a.spec_file), a.spec_file);
        if (!override_spec.closed_q) {
            throw parse_error(a.spec_file + ": field 'name': verify needs a catalog family name");
        }
        const auto it = std::find_if(opt.specs.begin(), opt.specs.end(),
                                     [&](const FibrationSpec &s) { return s.closed_q == override_spec.closed_q; });
        if (it == opt.specs.end()) {
            throw parse_error(a.spec_file + ": family " + override_spec.name + " is not selected by --family");
        }
        *it = override_spec;
    }

    const verify::Report report = verify::run_all(opt);
    int failed = 0;
    for (const auto &s : report.suites) {
        if (s.passed) {
            out << "[PASS] " << s.name << " (" << s.checks << " checks)\n";
        } else {
            ++failed;
            out << "[FAIL] " << s.name << ": " << s.detail << '\n';
        }
    }
    if (failed == 0) {
        out << "PASS (" << report.suites.size() << " suites)\n";
        return ok;
    }
    out << "FAIL (" << failed << " of " << report.suites.size() << " suites)\n";
    return verification_failed;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Hirzebruch chi_y genus of elliptic fibrations"};
    app.name("hirz");
    app.require_subcommand(1);

    auto *families = app.add_subcommand("families", "List the catalog fibrations and their closed forms");

    QArgs qa;
    auto *q = app.add_subcommand("q", "Expansion of Q for a family or spec file");
    q->add_option("target", qa.target, "Family name or spec file")->required();
    q->add_option("--wmax", qa.wmax, "Weight truncation")->check(CLI::Range(1, 14));
    q->add_option("--qmax", qa.qmax, "y-degree truncation")->check(CLI::NonNegativeNumber);
    q->add_option("--format", qa.format)->check(CLI::IsMember({"text", "json", "latex"}));
    q->add_flag("--closed", qa.closed, "Print the unexpanded closed form");
    q->add_flag("--derived", qa.derived, "Compute by pushforward even when a closed form exists");

    PtableArgs pa;
    auto *pt = app.add_subcommand("ptable", "The polynomials P_n(U)");
    pt->add_option("family", pa.family)->required();
    pt->add_option("--nmax", pa.nmax)->check(CLI::NonNegativeNumber);
    pt->add_flag("--check", pa.check, "Compare against the tabulated closed forms");

    ChiArgs ca;
    auto *chi = app.add_subcommand("chi", "Hirzebruch invariants chi_q over a base");
    chi->add_option("target", ca.target, "Family name or spec file")->required();
    auto *base_opt = chi->add_option("--base", ca.base, "pd:<d>:<n> for P^d with L = O(n)");
    chi->add_option("--base-file", ca.base_file, "Intersection table JSON")->excludes(base_opt);
    chi->add_option("--q", ca.q, "q or 'all'");
    chi->add_flag("--class", ca.show_class, "Print the symbolic integrand class");
    chi->add_flag("--verify", ca.verify, "Recompute through the P-polynomial route");
    chi->add_option("--format", ca.format)->check(CLI::IsMember({"text", "json"}));

    VerifyArgs va;
    auto *ver = app.add_subcommand("verify", "Run the identity suites");
    ver->add_option("--family", va.family, "all or a family name");
    ver->add_option("--wmax", va.wmax)->check(CLI::Range(1, 12));
    ver->add_option("--qmax", va.qmax)->check(CLI::NonNegativeNumber);
    ver->add_option("--spec-file", va.spec_file, "Replace a catalog family's roots");
    ver->add_option("--random", va.random_cases, "Random series for the derivative oracle")
        ->check(CLI::NonNegativeNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return ok;
        }
        err << "error: " << e.what() << '\n';
        return usage_error;
    }

    try {
        if (*families) {
            return cmd_families(out);
        }
        if (*q) {
            return cmd_q(qa, out);
        }
        if (*pt) {
            return cmd_ptable(pa, out);
        }
        if (*chi) {
            return cmd_chi(ca, out);
        }
        return cmd_verify(va, out);
    } catch (const verification_failure &e) {
        err << "verification failed: " << e.what() << '\n';
        return verification_failed;
    } catch (const hirzebruch::error &e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
}

} // namespace hirzebruch::cli
