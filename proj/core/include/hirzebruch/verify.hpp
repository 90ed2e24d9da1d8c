#ifndef HIRZEBRUCH_VERIFY_HPP
#define HIRZEBRUCH_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <hirzebruch/fibrations.hpp>
#include <hirzebruch/wseries.hpp>

namespace hirzebruch::verify
{

struct SuiteResult {
    std::string name;
    bool passed = true;
    int checks = 0;
    // First failing check, with the offending (weight, y) coefficient.
    std::string detail;
};

struct Report {
    std::vector<SuiteResult> suites;

    bool passed() const;
};

struct Options {
    // Fibrations under test; each must carry its closed form for the
    // Q-identity suite. Defaults to the whole catalog.
    std::vector<FibrationSpec> specs = catalog();
    int wmax = 6;
    int qmax = 7;
    int random_cases = 50;
    std::uint64_t seed = 20120401;
    // Largest base dimension for the class-level suites (capped by wmax).
    int max_base_dim = 4;
};

// Describes the first (weight, y) component where a and b differ, or
// nullopt when they are equal. Orders must agree.
std::optional<std::string> first_mismatch(const WSeries &a, const WSeries &b);

SuiteResult q_identity(const Options &opt);
SuiteResult p_table(const Options &opt);
SuiteResult d5_derivative_oracle(const Options &opt);
SuiteResult lemma_power_sums(const Options &opt);
SuiteResult euler_e8(const Options &opt);
SuiteResult serre_duality(const Options &opt);
SuiteResult integrality(const Options &opt);
SuiteResult route_consistency(const Options &opt);

// All eight suites in the order above.
Report run_all(const Options &opt);

// Lemma identity for one root tuple: sum_i f(l_i t) - d a_0 against
// f . (-tC'/C) with C = prod (1 - l_i t), to t-order `order`.
bool lemma_holds(const std::vector<int> &roots, int order, int qmax);

// Random series in H, L, y for oracle comparisons.
WSeries random_h_series(std::uint64_t seed, int wmax, int qmax, int terms);

} // namespace hirzebruch::verify

#endif
