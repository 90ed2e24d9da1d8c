#include "spec_io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace hirzebruch::cli
{

namespace
{

using nlohmann::json;

std::string line_col(std::string_view text, std::size_t byte)
{
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

json parse_json(std::string_view text, const std::string &source)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        std::string what = e.what();
        if (const auto pos = what.find("syntax error"); pos != std::string::npos) {
            what = what.substr(pos);
        }
        throw parse_error(source + ":" + line_col(text, e.byte) + ": " + what);
    }
}

[[noreturn]] void field_error(const std::string &source, const std::string &field, const std::string &msg)
{
    throw parse_error(source + ": field '" + field + "': " + msg);
}

int as_int(const json &j, const std::string &source, const std::string &field)
{
    if (!j.is_number_integer()) {
        field_error(source, field, "expected an integer");
    }
    return j.get<int>();
}

std::vector<RootForm> parse_roots(const json &j, const std::string &source, const std::string &field)
{
    if (!j.is_array()) {
        field_error(source, field, "expected an array of [a, b] pairs");
    }
    std::vector<RootForm> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string f = field + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != 2) {
            field_error(source, f, "expected an [a, b] pair");
        }
        out.push_back({as_int(j[i][0], source, f + "[0]"), as_int(j[i][1], source, f + "[1]")});
    }
    return out;
}

} // namespace

FibrationSpec parse_spec(std::string_view text, const std::string &source)
{
    const json j = parse_json(text, source);
    if (!j.is_object()) {
        throw parse_error(source + ": expected a JSON object");
    }
    for (const auto &[key, _] : j.items()) {
        if (key != "name" && key != "bundle" && key != "n_roots" && key != "f_roots") {
            field_error(source, key, "unknown field");
        }
    }
    FibrationSpec spec;
    if (!j.contains("name") || !j["name"].is_string()) {
        field_error(source, "name", "expected a string");
    }
    spec.name = j["name"].get<std::string>();
    if (!j.contains("bundle") || !j["bundle"].is_array()) {
        field_error(source, "bundle", "expected an array of integers");
    }
    for (std::size_t i = 0; i < j["bundle"].size(); ++i) {
        spec.bundle.exps.push_back(as_int(j["bundle"][i], source, "bundle[" + std::to_string(i) + "]"));
    }
    if (!j.contains("n_roots")) {
        field_error(source, "n_roots", "missing");
    }
    spec.n_roots = parse_roots(j["n_roots"], source, "n_roots");
    spec.f_roots = j.contains("f_roots") ? parse_roots(j["f_roots"], source, "f_roots")
                                         : default_f_roots(spec.bundle);
    spec.closed_q = family_from_name(spec.name);
    try {
        validate(spec, spec.closed_q.has_value());
    } catch (const invalid_spec &e) {
        throw parse_error(source + ": " + e.what());
    }
    return spec;
}

BaseSpec parse_base(std::string_view text, const std::string &source)
{
    const json j = parse_json(text, source);
    if (!j.is_object()) {
        throw parse_error(source + ": expected a JSON object");
    }
    if (!j.contains("dim")) {
        field_error(source, "dim", "missing");
    }
    const int dim = as_int(j["dim"], source, "dim");
    if (dim < 0) {
        field_error(source, "dim", "must be non-negative");
    }
    if (!j.contains("monomials") || !j["monomials"].is_array()) {
        field_error(source, "monomials", "expected an array");
    }
    std::map<Monomial, Rational> table;
    for (std::size_t i = 0; i < j["monomials"].size(); ++i) {
        const std::string f = "monomials[" + std::to_string(i) + "]";
        const json &entry = j["monomials"][i];
        if (!entry.is_object() || !entry.contains("exps") || !entry["exps"].is_object()) {
            field_error(source, f + ".exps", "expected an object of variable exponents");
        }
        Monomial m;
        for (const auto &[name, e] : entry["exps"].items()) {
            const auto v = Var::from_name(name);
            if (!v || *v == Var::H()) {
                field_error(source, f + ".exps." + name, "unknown base variable");
            }
            const int ex = as_int(e, source, f + ".exps." + name);
            if (ex < 0) {
                field_error(source, f + ".exps." + name, "negative exponent");
            }
            m = m * Monomial(*v, ex);
        }
        if (!entry.contains("value")) {
            field_error(source, f + ".value", "missing");
        }
        Rational value;
        if (entry["value"].is_number_integer()) {
            value = Rational(entry["value"].get<long>());
        } else if (entry["value"].is_string()) {
            try {
                value = Rational::parse(entry["value"].get<std::string>());
            } catch (const hirzebruch::error &e) {
                field_error(source, f + ".value", e.what());
            }
        } else {
            field_error(source, f + ".value", "expected \"num/den\"");
        }
        if (!table.emplace(m, value).second) {
            field_error(source, f, "duplicate monomial " + m.to_string());
        }
    }
    try {
        return BaseSpec::from_table(dim, std::move(table));
    } catch (const invalid_spec &e) {
        throw parse_error(source + ": " + e.what());
    }
}

BaseSpec parse_base_arg(const std::string &arg)
{
    const std::string prefix = "pd:";
    const auto bad = [&] { return parse_error("--base '" + arg + "': expected pd:<d>:<n>"); };
    if (arg.rfind(prefix, 0) != 0) {
        throw bad();
    }
    const std::string rest = arg.substr(prefix.size());
    const auto colon = rest.find(':');
    if (colon == std::string::npos) {
        throw bad();
    }
    const auto to_int = [&](std::string_view s) {
        int v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) {
            throw bad();
        }
        return v;
    };
    const int d = to_int(std::string_view(rest).substr(0, colon));
    const int n = to_int(std::string_view(rest).substr(colon + 1));
    if (d < 0) {
        throw bad();
    }
    return BaseSpec::projective_space(d, n);
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw parse_error(path + ": cannot open file");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

FibrationSpec resolve_target(const std::string &target)
{
    if (const auto f = family_from_name(target)) {
        return catalog_spec(*f);
    }
    if (std::filesystem::is_regular_file(target)) {
        return parse_spec(read_file(target), target);
    }
    throw parse_error("unknown family '" + target + "' (expected D5, E6, E7, E8 or a spec file)");
}

} // namespace hirzebruch::cli
