#ifndef HIRZEBRUCH_CLI_SPEC_IO_HPP
#define HIRZEBRUCH_CLI_SPEC_IO_HPP

#include <string>
#include <string_view>

#include <hirzebruch/fibrations.hpp>
#include <hirzebruch/genseries.hpp>

#include "format.hpp"

namespace hirzebruch::cli
{

// {"name": str, "bundle": [int], "n_roots": [[a, b]], "f_roots": [[a, b]]?}
// A name matching a catalog family picks up its closed form. Errors name the
// source, the line for syntax errors and the offending field otherwise.
FibrationSpec parse_spec(std::string_view text, const std::string &source);

// {"dim": d, "monomials": [{"exps": {"L": e, "c1": e}, "value": "n/d"}]}
BaseSpec parse_base(std::string_view text, const std::string &source);

// "pd:<d>:<n>", P^d with L = O(n).
BaseSpec parse_base_arg(const std::string &arg);

std::string read_file(const std::string &path);

// Catalog name or path to a spec file.
FibrationSpec resolve_target(const std::string &target);

} // namespace hirzebruch::cli

#endif
