#ifndef HIRZEBRUCH_PUSHFORWARD_HPP
#define HIRZEBRUCH_PUSHFORWARD_HPP

#include <vector>

#include <hirzebruch/wseries.hpp>

namespace hirzebruch
{

// E = L^{m_1} + ... + L^{m_r} over the base; P(E) is the bundle of lines and
// H = c_1(O(1)).
struct BundleSpec {
    std::vector<int> exps;

    int rank() const
    {
        return static_cast<int>(exps.size());
    }

    friend bool operator==(const BundleSpec &, const BundleSpec &) = default;
};

// Homogeneous components s_0..s_wmax of s(E) = prod_j (1 + m_j L)^{-1}.
std::vector<WSeries> segre_series(const BundleSpec &bundle, int wmax);

// pi_* along P(E) -> B via pi_* H^{r-1+j} = s_j(E), linear over everything
// that is not H. The result is exact to target_wmax, which needs
// d.wmax() >= target_wmax + r - 1; otherwise throws truncation_deficit.
WSeries pushforward(const WSeries &d, const BundleSpec &bundle, int target_wmax);
// Same, with the largest target the input supports.
WSeries pushforward(const WSeries &d, const BundleSpec &bundle);

// Independent route for E = O + L + L + L:
//   1/2 d^2/dH^2 ((D - (a0 + a1 H + a2 H^2)) / H) at H = -L.
// Throws unsupported_oracle for any other bundle. Exact to d.wmax() - 3.
WSeries derivative_pushforward_d5(const WSeries &d, const BundleSpec &bundle);

} // namespace hirzebruch

#endif
