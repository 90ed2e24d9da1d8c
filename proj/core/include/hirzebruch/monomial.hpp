#ifndef HIRZEBRUCH_MONOMIAL_HPP
#define HIRZEBRUCH_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hirzebruch
{

// A generator of the graded coefficient ring: L and H (weight 1) or a formal
// Chern class c_i (weight i).
class Var
{
public:
    static constexpr int max_chern = 14;
    static constexpr int count = 2 + max_chern;

    static constexpr Var L()
    {
        return Var(0);
    }
    static constexpr Var H()
    {
        return Var(1);
    }
    // c_i for 1 <= i <= max_chern.
    static Var chern(int i);
    static std::optional<Var> from_name(std::string_view name);

    constexpr int id() const
    {
        return m_id;
    }
    constexpr bool is_chern() const
    {
        return m_id >= 2;
    }
    constexpr int chern_index() const
    {
        return m_id - 1;
    }
    constexpr int weight() const
    {
        return is_chern() ? chern_index() : 1;
    }
    // "L", "H", "c1", ...
    std::string name() const;

    friend constexpr bool operator==(Var, Var) = default;

private:
    explicit constexpr Var(int id) : m_id(id) {}

    int m_id;
};

// Commutative monomial in L, H, c_1, ..., c_max_chern. Stored as a dense
// exponent vector with a cached weight; the unit monomial has all zeros.
class Monomial
{
public:
    Monomial() = default;
    explicit Monomial(Var v, int exponent = 1);
    Monomial(std::initializer_list<std::pair<Var, int>> factors);

    int exponent(Var v) const
    {
        return m_exps[static_cast<std::size_t>(v.id())];
    }
    int weight() const
    {
        return m_weight;
    }
    bool is_one() const
    {
        return m_weight == 0;
    }
    int degree() const;

    Monomial with_exponent(Var v, int exponent) const;

    // Nonzero exponents in canonical variable order (L, H, c1, c2, ...).
    std::vector<std::pair<Var, int>> factors() const;

    std::size_t hash() const;

    friend Monomial operator*(const Monomial &a, const Monomial &b);

    friend bool operator==(const Monomial &a, const Monomial &b)
    {
        return a.m_exps == b.m_exps;
    }
    // Weight first, then exponent vectors (descending, so L^2 precedes L c1).
    friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b)
    {
        if (a.m_weight != b.m_weight) {
            return a.m_weight <=> b.m_weight;
        }
        return b.m_exps <=> a.m_exps;
    }

    // "L^2*c1", "1" for the unit.
    std::string to_string() const;

private:
    std::array<std::uint8_t, Var::count> m_exps{};
    std::uint8_t m_weight = 0;
};

// All monomials of exactly the given weight in the variables L, c_1..c_max_c
// (H excluded); used to enumerate intersection tables over a base.
std::vector<Monomial> base_monomials_of_weight(int weight, int max_c);

} // namespace hirzebruch

#endif
