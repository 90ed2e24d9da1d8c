#include <hirzebruch/errors.hpp>
#include <hirzebruch/monomial.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

namespace hirzebruch
{

Var Var::chern(int i)
{
    if (i < 1 || i > max_chern) {
        throw out_of_range("Chern class index " + std::to_string(i) + " outside [1, "
                           + std::to_string(max_chern) + "]");
    }
    return Var(i + 1);
}

std::optional<Var> Var::from_name(std::string_view name)
{
    if (name == "L") {
        return L();
    }
    if (name == "H") {
        return H();
    }
    if (name.size() >= 2 && name[0] == 'c') {
        int i = 0;
        const auto *first = name.data() + 1;
        const auto *last = name.data() + name.size();
        const auto res = std::from_chars(first, last, i);
        if (res.ec == std::errc{} && res.ptr == last && i >= 1 && i <= max_chern) {
            return chern(i);
        }
    }
    return std::nullopt;
}

std::string Var::name() const
{
    if (m_id == 0) {
        return "L";
    }
    if (m_id == 1) {
        return "H";
    }
    return "c" + std::to_string(chern_index());
}

Monomial::Monomial(Var v, int exponent)
{
    if (exponent < 0 || exponent > 255) {
        throw domain_error("monomial exponent out of range");
    }
    m_exps[static_cast<std::size_t>(v.id())] = static_cast<std::uint8_t>(exponent);
    m_weight = static_cast<std::uint8_t>(exponent * v.weight());
}

Monomial::Monomial(std::initializer_list<std::pair<Var, int>> factors)
{
    Monomial m;
    for (const auto &[v, e] : factors) {
        m = m * Monomial(v, e);
    }
    *this = m;
}

int Monomial::degree() const
{
    int d = 0;
    for (const auto e : m_exps) {
        d += e;
    }
    return d;
}

Monomial Monomial::with_exponent(Var v, int exponent) const
{
    Monomial m = *this;
    const int old = m.m_exps[static_cast<std::size_t>(v.id())];
    const int w = m.m_weight + (exponent - old) * v.weight();
    if (exponent < 0 || exponent > 255 || w > 255) {
        throw domain_error("monomial exponent out of range");
    }
    m.m_exps[static_cast<std::size_t>(v.id())] = static_cast<std::uint8_t>(exponent);
    m.m_weight = static_cast<std::uint8_t>(w);
    return m;
}

std::vector<std::pair<Var, int>> Monomial::factors() const
{
    std::vector<std::pair<Var, int>> out;
    for (int id = 0; id < Var::count; ++id) {
        const int e = m_exps[static_cast<std::size_t>(id)];
        if (e == 0) {
            continue;
        }
        const Var v = id == 0 ? Var::L() : (id == 1 ? Var::H() : Var::chern(id - 1));
        out.emplace_back(v, e);
    }
    return out;
}

std::size_t Monomial::hash() const
{
    // FNV-1a over the exponent bytes.
    std::size_t h = 1469598103934665603ull;
    for (const auto e : m_exps) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return h;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
    Monomial m;
    for (std::size_t i = 0; i < a.m_exps.size(); ++i) {
        const int e = a.m_exps[i] + b.m_exps[i];
        if (e > 255) {
            throw domain_error("monomial exponent out of range");
        }
        m.m_exps[i] = static_cast<std::uint8_t>(e);
    }
    const int w = a.m_weight + b.m_weight;
    if (w > 255) {
        throw domain_error("monomial weight out of range");
    }
    m.m_weight = static_cast<std::uint8_t>(w);
    return m;
}

std::string Monomial::to_string() const
{
    if (is_one()) {
        return "1";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[v, e] : factors()) {
        if (!first) {
            os << '*';
        }
        first = false;
        os << v.name();
        if (e > 1) {
            os << '^' << e;
        }
    }
    return os.str();
}

std::vector<Monomial> base_monomials_of_weight(int weight, int max_c)
{
    std::vector<Monomial> out;
    // Distribute `weight` over c_max_c, ..., c_1 and finally L.
    std::function<void(int, int, Monomial)> rec = [&](int i, int remaining, Monomial acc) {
        if (i == 0) {
            out.push_back(acc.with_exponent(Var::L(), remaining));
            return;
        }
        for (int e = 0; e * i <= remaining; ++e) {
            rec(i - 1, remaining - e * i, e == 0 ? acc : acc.with_exponent(Var::chern(i), e));
        }
    };
    rec(std::min(max_c, weight), weight, Monomial{});
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hirzebruch
