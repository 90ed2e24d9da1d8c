#ifndef HIRZEBRUCH_FIBRATIONS_HPP
#define HIRZEBRUCH_FIBRATIONS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <hirzebruch/char_classes.hpp>
#include <hirzebruch/pushforward.hpp>
#include <hirzebruch/unipoly.hpp>
#include <hirzebruch/wseries.hpp>

namespace hirzebruch
{

enum class Family { D5, E6, E7, E8 };

std::span<const Family> all_families();
std::string family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// A fibration Y in P(E) -> B described by the Chern roots of
// F = pi^*E (x) O(1) and of the normal bundle N of Y in P(E).
struct FibrationSpec {
    std::string name;
    BundleSpec bundle;
    std::vector<RootForm> f_roots;
    std::vector<RootForm> n_roots;
    // Catalog families carry their rational closed form for Q.
    std::optional<Family> closed_q;

    int fiber_dimension() const
    {
        return static_cast<int>(f_roots.size()) - 1 - static_cast<int>(n_roots.size());
    }
};

// H + m_j L for each m_j of the bundle.
std::vector<RootForm> default_f_roots(const BundleSpec &bundle);

FibrationSpec catalog_spec(Family f);
std::vector<FibrationSpec> catalog();

// Throws invalid_spec. Catalog entries must be elliptic (fiber dimension 1,
// rank >= 2, at least one normal root); custom ones only need fiber
// dimension >= 0.
void validate(const FibrationSpec &spec, bool catalog_entry);

// prod_F (1 + y e^{-l}) l/(1 - e^{-l}) * prod_N (1 - e^{-m})/(1 + y e^{-m}) / (1+y)
WSeries build_D(const FibrationSpec &spec, int wmax, int qmax);

// pi_* build_D, exact to (wmax, qmax).
WSeries derived_Q(const FibrationSpec &spec, int wmax, int qmax);

// Closed form of Q with U = e^{-L} expanded.
WSeries closed_form_Q(Family f, int wmax, int qmax);
std::string closed_form_string(Family f);

// Closed form when the spec has one, derived otherwise.
WSeries q_series(const FibrationSpec &spec, int wmax, int qmax);

// Coefficient of y^n in Q as an exact polynomial in U.
UniPoly p_polynomial(Family f, int n);
// The tabulated closed forms of P_n (independent of p_polynomial).
UniPoly p_table(Family f, int n);
// Factored display of the tabulated P_n, e.g. "-U(4U-1)(U-1)(U+1)^2(-U^2)".
std::string p_table_string(Family f, int n);

// p(U) at U = e^{-L}, orders (wmax, 0).
WSeries u_polynomial_at_exp(const UniPoly &p, int wmax);

// sum_{i<=q} P_{q-i} H_i(B) over a base of dimension d, orders (d, 0).
// Specs without a closed form use the y^q coefficient of derived Q * H_y(B).
WSeries pushforward_class(const FibrationSpec &spec, int q, int d);

} // namespace hirzebruch

#endif
