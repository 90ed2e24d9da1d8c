#ifndef HIRZEBRUCH_CLI_FORMAT_HPP
#define HIRZEBRUCH_CLI_FORMAT_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include <hirzebruch/errors.hpp>
#include <hirzebruch/wseries.hpp>

namespace hirzebruch::cli
{

class parse_error : public hirzebruch::error
{
public:
    using hirzebruch::error::error;
};

struct OutputTerm {
    std::map<std::string, int> exps;
    // Exact "num/den".
    std::string coeff;

    friend bool operator==(const OutputTerm &, const OutputTerm &) = default;
};

// One homogeneous (t-degree, y-degree) component of a series.
struct OutputRecord {
    int t_deg = 0;
    int y_deg = 0;
    std::vector<OutputTerm> terms;

    friend bool operator==(const OutputRecord &, const OutputRecord &) = default;
};

// Components in canonical order: t_deg, then y_deg, terms in monomial order.
std::vector<OutputRecord> to_records(const WSeries &s);

// {"wmax": .., "qmax": .., "records": [{"t_deg", "y_deg", "terms": [{"exps", "coeff"}]}]}
nlohmann::json series_to_json(const WSeries &s);
// Inverse of series_to_json; throws parse_error on malformed input.
WSeries series_from_json(const nlohmann::json &j);

// "(L - 1/2*L^2) + (-11*L + ...) y + ...", grouped by powers of y.
std::string series_to_text(const WSeries &s);
// Deterministic LaTeX, grouped by powers of y.
std::string series_to_latex(const WSeries &s);
// LaTeX of a y-free class.
std::string class_to_latex(const WSeries &s);

} // namespace hirzebruch::cli

#endif
