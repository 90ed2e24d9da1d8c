#include "format.hpp"

#include <sstream>

namespace hirzebruch::cli
{

namespace
{

std::string latex_monomial(const Monomial &m)
{
    std::ostringstream os;
    bool first = true;
    for (const auto &[v, e] : m.factors()) {
        if (!first) {
            os << ' ';
        }
        first = false;
        if (v.is_chern()) {
            os << "c_{" << v.chern_index() << '}';
        } else {
            os << v.name();
        }
        if (e > 1) {
            os << "^{" << e << '}';
        }
    }
    return os.str();
}

std::string latex_rational(const Rational &r)
{
    if (r.is_integer()) {
        return r.to_string();
    }
    return "\\frac{" + r.numerator().get_str() + "}{" + r.denominator().get_str() + "}";
}

std::string latex_terms(const std::vector<const WSeries::Term *> &terms)
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
            os << latex_rational(mag);
        } else if (mag.is_one()) {
            os << latex_monomial(t->mono);
        } else {
            os << latex_rational(mag) << ' ' << latex_monomial(t->mono);
        }
    }
    return os.str();
}

std::map<int, std::vector<const WSeries::Term *>> group_by_y(const WSeries &s)
{
    std::map<int, std::vector<const WSeries::Term *>> by_y;
    for (const auto &t : s.terms()) {
        by_y[t.ydeg].push_back(&t);
    }
    return by_y;
}

int require_int(const nlohmann::json &j, const char *field)
{
    if (!j.contains(field) || !j.at(field).is_number_integer()) {
        throw parse_error(std::string("field '") + field + "': expected an integer");
    }
    return j.at(field).get<int>();
}

} // namespace

std::vector<OutputRecord> to_records(const WSeries &s)
{
    std::vector<OutputRecord> out;
    for (const auto &t : s.terms()) {
        const int k = t.mono.weight();
        if (out.empty() || out.back().t_deg != k || out.back().y_deg != t.ydeg) {
            out.push_back({k, t.ydeg, {}});
        }
        OutputTerm term;
        for (const auto &[v, e] : t.mono.factors()) {
            term.exps.emplace(v.name(), e);
        }
        term.coeff = t.coeff.to_fraction_string();
        out.back().terms.push_back(std::move(term));
    }
    return out;
}

nlohmann::json series_to_json(const WSeries &s)
{
    nlohmann::json records = nlohmann::json::array();
    for (const auto &r : to_records(s)) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto &t : r.terms) {
            nlohmann::json exps = nlohmann::json::object();
            for (const auto &[name, e] : t.exps) {
                exps[name] = e;
            }
            terms.push_back({{"exps", exps}, {"coeff", t.coeff}});
        }
        records.push_back({{"t_deg", r.t_deg}, {"y_deg", r.y_deg}, {"terms", terms}});
    }
    return {{"wmax", s.wmax()}, {"qmax", s.qmax()}, {"records", records}};
}

WSeries series_from_json(const nlohmann::json &j)
{
    if (!j.is_object()) {
        throw parse_error("series: expected a JSON object");
    }
    const int wmax = require_int(j, "wmax");
    const int qmax = require_int(j, "qmax");
    if (!j.contains("records") || !j.at("records").is_array()) {
        throw parse_error("field 'records': expected an array");
    }
    std::vector<WSeries::Term> terms;
    std::size_t ri = 0;
    for (const auto &rec : j.at("records")) {
        const std::string where = "records[" + std::to_string(ri++) + "]";
        if (!rec.is_object()) {
            throw parse_error("field '" + where + "': expected an object");
        }
        const int t_deg = require_int(rec, "t_deg");
        const int y_deg = require_int(rec, "y_deg");
        if (!rec.contains("terms") || !rec.at("terms").is_array()) {
            throw parse_error("field '" + where + ".terms': expected an array");
        }
        for (const auto &term : rec.at("terms")) {
            if (!term.contains("exps") || !term.at("exps").is_object() || !term.contains("coeff")
                || !term.at("coeff").is_string()) {
                throw parse_error("field '" + where + ".terms': expected {\"exps\": {...}, \"coeff\": \"n/d\"}");
            }
            Monomial m;
            for (const auto &[name, e] : term.at("exps").items()) {
                const auto v = Var::from_name(name);
                if (!v || !e.is_number_integer() || e.get<int>() < 0) {
                    throw parse_error("field '" + where + ".terms.exps': bad entry '" + name + "'");
                }
                m = m * Monomial(*v, e.get<int>());
            }
            if (m.weight() != t_deg) {
                throw parse_error("field '" + where + "': term weight " + std::to_string(m.weight())
                                  + " disagrees with t_deg " + std::to_string(t_deg));
            }
            Rational c;
            try {
                c = Rational::parse(term.at("coeff").get<std::string>());
            } catch (const hirzebruch::error &e) {
                throw parse_error("field '" + where + ".terms.coeff': " + e.what());
            }
            terms.push_back({m, y_deg, c});
        }
    }
    try {
        return WSeries::from_terms(wmax, qmax, std::move(terms));
    } catch (const hirzebruch::error &e) {
        throw parse_error(std::string("series: ") + e.what());
    }
}

std::string series_to_text(const WSeries &s)
{
    if (s.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int q = 0; q <= s.qmax(); ++q) {
        const WSeries part = y_part(s, q);
        if (part.is_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << '(' << to_string(part) << ')';
        if (q == 1) {
            os << " y";
        } else if (q > 1) {
            os << " y^" << q;
        }
    }
    return os.str();
}

std::string series_to_latex(const WSeries &s)
{
    if (s.is_zero()) {
        return "0";
    }
    const auto by_y = group_by_y(s);
    std::ostringstream os;
    bool first = true;
    for (const auto &[q, terms] : by_y) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "\\left(" << latex_terms(terms) << "\\right)";
        if (q == 1) {
            os << " y";
        } else if (q > 1) {
            os << " y^{" << q << '}';
        }
    }
    return os.str();
}

std::string class_to_latex(const WSeries &s)
{
    if (s.is_zero()) {
        return "0";
    }
    std::vector<const WSeries::Term *> terms;
    for (const auto &t : s.terms()) {
        terms.push_back(&t);
    }
    return latex_terms(terms);
}

} // namespace hirzebruch::cli
