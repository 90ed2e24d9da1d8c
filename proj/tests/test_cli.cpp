#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <hirzebruch/fibrations.hpp>

#include "cli/commands.hpp"
#include "cli/format.hpp"
#include "cli/spec_io.hpp"
#include "support.hpp"

using namespace hirzebruch;

namespace
{

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result hirz(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string &name, const std::string &content)
{
    const auto path = std::filesystem::temp_directory_path() / ("hirz_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("q: expansion, closed form, unknown family")
    {
        auto r = hirz({"q", "E8", "--wmax", "2", "--qmax", "1", "--format", "text"});
        CHECK(r.code == 0);
        CHECK(r.out == "(L - 1/2*L^2) + (-11*L + 73/2*L^2) y\n");

        r = hirz({"q", "D5", "--closed"});
        CHECK(r.code == 0);
        CHECK(r.out == closed_form_string(Family::D5) + "\n");

        r = hirz({"q", "nosuch"});
        CHECK(r.code == 2);
        CHECK(r.err.find("unknown family") != std::string::npos);

        r = hirz({"q", "E6", "--format", "yaml"});
        CHECK(r.code == 2);
    }

    TEST_CASE("q: derived and closed routes print the same")
    {
        const auto a = hirz({"q", "E7", "--wmax", "3", "--qmax", "3"});
        const auto b = hirz({"q", "E7", "--wmax", "3", "--qmax", "3", "--derived"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }

    TEST_CASE("q: JSON round-trips")
    {
        const auto r = hirz({"q", "E6", "--wmax", "3", "--qmax", "2", "--format", "json"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["family"] == "E6");
        CHECK(cli::series_from_json(j) == q_series(catalog_spec(Family::E6), 3, 2));
        for (const auto &rec : j["records"]) {
            for (const auto &t : rec["terms"]) {
                CHECK(t["coeff"].get<std::string>().find('/') != std::string::npos);
            }
        }
    }

    TEST_CASE("property: JSON round-trip of random series")
    {
        std::mt19937_64 rng(31);
        for (int i = 0; i < 30; ++i) {
            const auto s = testing::random_series(rng, 5, 3, 10);
            const auto j = cli::series_to_json(s);
            CHECK(cli::series_from_json(nlohmann::json::parse(j.dump())) == s);
            CHECK(cli::to_records(cli::series_from_json(j)) == cli::to_records(s));
        }
    }

    TEST_CASE("JSON series parse errors")
    {
        using nlohmann::json;
        CHECK_THROWS_AS(cli::series_from_json(json::array()), cli::parse_error);
        CHECK_THROWS_AS(cli::series_from_json(json{{"wmax", 2}, {"qmax", 1}}), cli::parse_error);
        const json bad_weight = json::parse(
            R"({"wmax": 2, "qmax": 0, "records": [{"t_deg": 1, "y_deg": 0, "terms": [{"exps": {"L": 2}, "coeff": "1/1"}]}]})");
        CHECK_THROWS_WITH_AS(cli::series_from_json(bad_weight), doctest::Contains("disagrees with t_deg"),
                             cli::parse_error);
        const json bad_coeff = json::parse(
            R"({"wmax": 2, "qmax": 0, "records": [{"t_deg": 1, "y_deg": 0, "terms": [{"exps": {"L": 1}, "coeff": "0.5"}]}]})");
        CHECK_THROWS_WITH_AS(cli::series_from_json(bad_coeff), doctest::Contains("coeff"), cli::parse_error);
    }

    TEST_CASE("LaTeX output is deterministic")
    {
        const auto a = hirz({"q", "E8", "--wmax", "3", "--qmax", "2", "--format", "latex"});
        const auto b = hirz({"q", "E8", "--wmax", "3", "--qmax", "2", "--format", "latex"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out.rfind("\\left(L - \\frac{1}{2} L^{2} + \\frac{1}{6} L^{3}\\right)", 0) == 0);
        CHECK(cli::class_to_latex(WSeries(2, 0)) == "0");
    }

    TEST_CASE("ptable")
    {
        auto r = hirz({"ptable", "E6", "--nmax", "1"});
        CHECK(r.code == 0);
        CHECK(r.out == "P0 = 1-U\nP1 = U^4+2U^3+U^2-U-3\n");

        r = hirz({"ptable", "E8", "--nmax", "0"});
        CHECK(r.out == "P0 = 1-U\n");

        r = hirz({"ptable", "D5", "--nmax", "2", "--check"});
        CHECK(r.code == 0);
        CHECK(r.out.find("P2 = -3U^5-3U^4+3U^3+3U^2  [= -U(3U)(U-1)(U+1)^2]  ok") != std::string::npos);
        CHECK(r.out.find("PASS") != std::string::npos);

        r = hirz({"ptable", "E9"});
        CHECK(r.code == 2);
        r = hirz({"ptable", "E6", "--nmax", "-1"});
        CHECK(r.code == 2);
    }

    TEST_CASE("chi")
    {
        auto r = hirz({"chi", "E8", "--base", "pd:2:3", "--q", "all"});
        CHECK(r.code == 0);
        CHECK(r.out == "chi_0 = 0\nchi_1 = 270\nchi_2 = -270\nchi_3 = 0\nalternating sum = -540\n");

        r = hirz({"chi", "E6", "--base", "pd:4:1", "--q", "2", "--class", "--verify"});
        CHECK(r.code == 0);
        CHECK(r.out.find("class[t^4 y^2] = -1729/12*L^4 + 131/3*L^3*c1") == 0);

        r = hirz({"chi", "E8", "--base", "pd:1:1", "--q", "3"});
        CHECK(r.code == 2);
        CHECK(r.err.find("exceeds dim Y") != std::string::npos);

        r = hirz({"chi", "E8", "--base", "pd:x:1"});
        CHECK(r.code == 2);
        r = hirz({"chi", "E8"});
        CHECK(r.code == 2);
        r = hirz({"chi", "E8", "--base", "pd:1:1", "--base-file", "x.json"});
        CHECK(r.code == 2);

        r = hirz({"chi", "E8", "--base", "pd:2:3", "--format", "json"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["alternating_sum"] == "-540/1");
        CHECK(j["chi"][1]["value"] == "270/1");
    }

    TEST_CASE("chi with a base file")
    {
        const std::string p2 = temp_file("p2.json", R"({"dim": 2, "monomials": [
            {"exps": {"L": 2}, "value": "9/1"}, {"exps": {"L": 1, "c1": 1}, "value": "9"},
            {"exps": {"c1": 2}, "value": "9/1"}, {"exps": {"c2": 1}, "value": "3/1"}]})");
        auto r = hirz({"chi", "E8", "--base-file", p2});
        CHECK(r.code == 0);
        CHECK(r.out.find("alternating sum = -540") != std::string::npos);

        const std::string missing = temp_file("missing.json", R"({"dim": 2, "monomials": [
            {"exps": {"L": 2}, "value": "9/1"}]})");
        r = hirz({"chi", "E8", "--base-file", missing, "--q", "1"});
        CHECK(r.code == 2);
        CHECK(r.err.find("no intersection number") != std::string::npos);

        const std::string broken = temp_file("broken.json", "{\"dim\": 2,\n \"monomials\": [\n {\"exps\": {\"L\": 2}, \"value\": 1/2}]}");
        r = hirz({"chi", "E8", "--base-file", broken});
        CHECK(r.code == 2);
        CHECK(r.err.find(":3:") != std::string::npos);

        const std::string badvar = temp_file("badvar.json", R"({"dim": 1, "monomials": [{"exps": {"H": 1}, "value": "1"}]})");
        r = hirz({"chi", "E8", "--base-file", badvar});
        CHECK(r.code == 2);
        CHECK(r.err.find("field 'monomials[0].exps.H'") != std::string::npos);
    }

    TEST_CASE("spec files")
    {
        const std::string e6 = temp_file("e6.json", R"({"name": "E6", "bundle": [0, 1, 1], "n_roots": [[3, 3]]})");
        const auto spec = cli::parse_spec(cli::read_file(e6), e6);
        CHECK(spec.closed_q == Family::E6);
        CHECK(spec.f_roots == catalog_spec(Family::E6).f_roots);

        const std::string custom = temp_file("custom.json",
                                             R"({"name": "cubic", "bundle": [0, 1, 1], "n_roots": [[3, 3]],
                                                 "f_roots": [[1, 0], [1, 1], [1, 1]]})");
        auto r = hirz({"q", custom, "--wmax", "3", "--qmax", "2"});
        CHECK(r.code == 0);
        CHECK(r.out == hirz({"q", "E6", "--wmax", "3", "--qmax", "2"}).out);
        r = hirz({"chi", custom, "--base", "pd:2:3", "--verify"});
        CHECK(r.code == 0);
        r = hirz({"q", custom, "--closed"});
        CHECK(r.code == 2);

        const std::string syntax = temp_file("syntax.json", "{\"name\": \"E6\",\n \"bundle\": [0,1,1]\n \"n_roots\": [[3,3]]}");
        CHECK_THROWS_WITH_AS(cli::parse_spec(cli::read_file(syntax), "s.json"), doctest::Contains("s.json:3:"),
                             cli::parse_error);
        CHECK_THROWS_WITH_AS(cli::parse_spec(R"({"name": "E6", "bundle": [0, 1, 1], "n_roots": [[3, "x"]]})", "s"),
                             doctest::Contains("field 'n_roots[0][1]'"), cli::parse_error);
        CHECK_THROWS_WITH_AS(cli::parse_spec(R"({"name": "E6", "bundle": [0, 1], "n_roots": [[3, 3]]})", "s"),
                             doctest::Contains("fibration"), cli::parse_error);
        CHECK_THROWS_WITH_AS(cli::parse_spec(R"({"name": "E6", "bundle": [0, 1, 1], "n_roots": [[3, 3]], "x": 1})", "s"),
                             doctest::Contains("field 'x'"), cli::parse_error);
        CHECK_THROWS_AS(cli::parse_spec(R"({"bundle": [0, 1, 1], "n_roots": [[3, 3]]})", "s"), cli::parse_error);
    }

    TEST_CASE("verify: smoke, negative control")
    {
        auto r = hirz({"verify", "--family", "D5", "--wmax", "2"});
        CHECK(r.code == 0);
        CHECK(r.out.find("PASS (8 suites)") != std::string::npos);

        const std::string bad = temp_file("bad_e6.json", R"({"name": "E6", "bundle": [0, 1, 1], "n_roots": [[3, 4]]})");
        r = hirz({"verify", "--family", "E6", "--wmax", "3", "--spec-file", bad});
        CHECK(r.code == 1);
        CHECK(r.out.find("first mismatch at (weight 1, y^0)") != std::string::npos);
        CHECK(r.out.find("FAIL (") != std::string::npos);

        r = hirz({"verify", "--family", "D5", "--wmax", "2", "--spec-file", bad});
        CHECK(r.code == 2);
        r = hirz({"verify", "--family", "G2"});
        CHECK(r.code == 2);
    }

    TEST_CASE("usage")
    {
        CHECK(hirz({}).code == 2);
        CHECK(hirz({"frobnicate"}).code == 2);
        const auto r = hirz({"--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("ptable") != std::string::npos);
        CHECK(hirz({"families"}).out.find("E7: bundle (0,1,2,2)") != std::string::npos);
    }
}
