#include <doctest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chaoskit/cli/commands.hpp"
#include "support/oracles.hpp"

namespace pt = boost::property_tree;
using chaoskit::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::pair<double, double>> parse_points(const std::string& attr) {
    std::vector<std::pair<double, double>> pts;
    std::istringstream in(attr);
    std::string pair;
    while (in >> pair) {
        const auto comma = pair.find(',');
        pts.emplace_back(std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1)));
    }
    return pts;
}

/// Collects every element whose class attribute equals `cls`, depth first.
void collect(const pt::ptree& node, const std::string& tag, const std::string& cls, std::vector<pt::ptree>& found) {
    for (const auto& [name, child] : node) {
        if (name == "<xmlattr>") continue;
        if (name == tag && child.get<std::string>("<xmlattr>.class", "") == cls) found.push_back(child);
        collect(child, tag, cls, found);
    }
}

std::vector<pt::ptree> elements(const std::string& svg, const std::string& tag, const std::string& cls) {
    std::istringstream in(svg);
    pt::ptree tree;
    pt::read_xml(in, tree);  // throws on malformed XML
    std::vector<pt::ptree> found;
    collect(tree, tag, cls, found);
    return found;
}

std::vector<std::pair<long, double>> parse_tx(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    REQUIRE(line == "t,x");
    std::vector<std::pair<long, double>> rows;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        rows.emplace_back(std::stol(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
    }
    return rows;
}

}  // namespace

TEST_CASE("simulate") {
    SUBCASE("fixed point after default burn-in") {
        const auto res = invoke({"simulate", "--r", "2.5", "--x0", "0.3", "--length", "5"});
        REQUIRE(res.code == 0);
        const auto rows = parse_tx(res.out);
        REQUIRE(rows.size() == 5);
        CHECK(std::abs(rows.back().second - 0.6) <= 1e-3);
    }
    SUBCASE("(T, eps) at r = 1 decays toward 0") {
        const auto res = invoke({"simulate", "--T", "0.17884", "--epsilon", "5.5917", "--length", "3"});
        REQUIRE(res.code == 0);
        const auto rows = parse_tx(res.out);
        REQUIRE(rows.size() == 3);
        CHECK(rows[1].second < rows[0].second);
        CHECK(rows[2].second < rows[1].second);
        CHECK(rows[2].second < 2e-3);
    }
    SUBCASE("domain and flag errors exit 2 with one diagnostic line") {
        for (const auto& args : std::vector<std::vector<std::string>>{{"simulate", "--r", "5.0"},
                                                                      {"simulate", "--r", "2", "--T", "1"},
                                                                      {"simulate", "--T", "1"},
                                                                      {"simulate"},
                                                                      {"simulate", "--r", "2", "--x0", "1.5"},
                                                                      {"simulate", "--rr", "2"},
                                                                      {}}) {
            const auto res = invoke(args);
            CHECK(res.code == 2);
            CHECK_FALSE(res.err.empty());
            CHECK(res.err.find('\n') == res.err.size() - 1);
            CHECK(res.out.empty());
        }
    }
    SUBCASE("--help succeeds") { CHECK(invoke({"--help"}).code == 0); }
}

TEST_CASE("cobweb") {
    SUBCASE("staircase converges to the fixed point") {
        const auto res = invoke({"cobweb", "--r", "2.8", "--x0", "0.2", "--steps", "40"});
        REQUIRE(res.code == 0);
        const auto steps = elements(res.out, "polyline", "cobweb-step");
        REQUIRE(steps.size() == 40);
        const auto last = parse_points(steps.back().get<std::string>("<xmlattr>.points"));
        CHECK(std::abs(last.back().first - oracle::fixed_point(2.8)) <= 1e-2);
        CHECK(std::abs(last.back().second - 0.6429) <= 1e-2);
        CHECK(elements(res.out, "polyline", "map").size() == 1);
        CHECK(elements(res.out, "line", "diagonal").size() == 1);
        // everything drawn in data space stays in the unit square
        for (const auto& s : steps)
            for (auto [x, y] : parse_points(s.get<std::string>("<xmlattr>.points"))) {
                CHECK(x >= 0.0);
                CHECK(x <= 1.0);
                CHECK(y >= 0.0);
                CHECK(y <= 1.0);
            }
    }
    SUBCASE("critical orbit at r = 4") {
        const auto res = invoke({"cobweb", "--r", "4", "--x0", "0.5", "--steps", "2"});
        REQUIRE(res.code == 0);
        const auto steps = elements(res.out, "polyline", "cobweb-step");
        REQUIRE(steps.size() == 2);
        const auto first = parse_points(steps[0].get<std::string>("<xmlattr>.points"));
        const auto second = parse_points(steps[1].get<std::string>("<xmlattr>.points"));
        CHECK(first[1] == std::pair<double, double>{0.5, 1.0});
        CHECK(second[1] == std::pair<double, double>{1.0, 0.0});
    }
    SUBCASE("zero steps") { CHECK(invoke({"cobweb", "--r", "3", "--steps", "0"}).code == 2); }
}

TEST_CASE("bifurcate") {
    SUBCASE("svg has steps x samples markers inside the data box") {
        const auto res = invoke({"bifurcate", "--r-lo", "3.0", "--r-hi", "4.0", "--steps", "11", "--burn-in", "1000",
                                 "--samples", "7", "--format", "svg"});
        REQUIRE(res.code == 0);
        const auto samples = elements(res.out, "line", "sample");
        CHECK(samples.size() == 77);
        for (const auto& s : samples) {
            const double x = s.get<double>("<xmlattr>.x1");
            const double y = s.get<double>("<xmlattr>.y1");
            CHECK(x >= 3.0);
            CHECK(x <= 4.0);
            CHECK(y >= 0.0);
            CHECK(y <= 1.0);
        }
    }
    SUBCASE("csv rows") {
        const auto res =
            invoke({"bifurcate", "--r-lo", "2.5", "--r-hi", "2.5", "--steps", "1", "--samples", "8"});
        REQUIRE(res.code == 0);
        std::istringstream in(res.out);
        std::string line;
        std::getline(in, line);
        CHECK(line == "r,x");
        int n = 0;
        while (std::getline(in, line)) {
            ++n;
            CHECK(std::abs(std::stod(line.substr(line.find(',') + 1)) - 0.6) <= 1e-6);
        }
        CHECK(n == 8);
    }
    SUBCASE("bad range") { CHECK(invoke({"bifurcate", "--r-lo", "3.5", "--r-hi", "3.0"}).code == 2); }
}

TEST_CASE("locate, lyapunov, cycle, liyorke") {
    SUBCASE("locate first doubling") {
        const auto res = invoke({"locate", "--index", "1", "--tol", "1e-4"});
        REQUIRE(res.code == 0);
        const auto doc = nlohmann::json::parse(res.out);
        CHECK(std::abs(doc["r_located"].get<double>() - 3.0) <= 1e-4);
        CHECK(doc["period_before"] == 1);
        CHECK(doc["period_after"] == 2);
    }
    SUBCASE("convergence failure exits 3") {
        const auto res = invoke({"locate", "--index", "1", "--lo", "3.1", "--hi", "3.2", "--tol", "1e-4"});
        CHECK(res.code == 3);
        CHECK(res.err.find("convergence") != std::string::npos);
    }
    SUBCASE("locate input errors exit 2") {
        CHECK(invoke({"locate", "--index", "4"}).code == 2);
        CHECK(invoke({"locate", "--tol", "1e-8"}).code == 2);
    }
    SUBCASE("lyapunov") {
        const auto res = invoke({"lyapunov", "--r", "4", "--iterates", "200000"});
        REQUIRE(res.code == 0);
        const auto doc = nlohmann::json::parse(res.out);
        CHECK(std::abs(doc["value"].get<double>() - std::log(2.0)) <= 0.02);
        CHECK(doc["diverged_to_minus_infinity"] == false);
    }
    SUBCASE("cycle") {
        const auto doc = nlohmann::json::parse(invoke({"cycle", "--r", "3.5"}).out);
        CHECK(doc["period"] == 4);
        CHECK(doc["points"].size() == 4);
        const auto chaos = nlohmann::json::parse(invoke({"cycle", "--r", "3.9"}).out);
        CHECK(chaos["aperiodic"] == true);
        CHECK(chaos["period"].is_null());
    }
    SUBCASE("liyorke certificate") {
        const auto res = invoke({"liyorke", "--r", "4"});
        REQUIRE(res.code == 0);
        const auto doc = nlohmann::json::parse(res.out);
        CHECK(doc["holds"] == true);
        CHECK(doc["f3"].get<double>() == 0.0);
        const auto low = nlohmann::json::parse(invoke({"liyorke", "--r", "1.5"}).out);
        CHECK(low["x_i"].is_null());
        CHECK(low["holds"] == false);
    }
    SUBCASE("liyorke threshold") {
        const auto doc = nlohmann::json::parse(invoke({"liyorke", "--threshold"}).out);
        const double r = doc["threshold"].get<double>();
        CHECK(r >= 3.83);
        CHECK(r <= 3.84);
        CHECK(invoke({"liyorke", "--threshold", "--lo", "3.9", "--hi", "4.0"}).code == 2);
    }
}

TEST_CASE("advise") {
    const auto res = invoke({"advise", "--alpha-beta", "0.9913", "--n", "0.0479", "--epsilon", "3.7737"});
    REQUIRE(res.code == 0);
    const auto doc = nlohmann::json::parse(res.out);
    CHECK(doc["rationale_case"] == "upper");
    CHECK(doc["recommendation"] == "TUNE_AVOID_BIFURCATIONS");
    CHECK(doc["flagged_epsilons"] == nlohmann::json::array({"eps_inf"}));
    CHECK(std::abs(doc["dangerous_epsilons"]["eps_inf"].get<double>() - 3.7737) <= 1e-3);

    // keys are emitted in sorted order
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(res.out.find("\"T\"") < res.out.find("\"alpha_plus_beta\""));

    const auto lower = nlohmann::json::parse(
        invoke({"advise", "--alpha-beta", "0.1494", "--n", "-0.1646", "--epsilon", "10"}).out);
    CHECK(lower["dangerous_epsilons"]["eps1"] == "unreachable");
    CHECK(std::abs(lower["steady_level"].get<double>() - 0.4408) <= 1e-3);

    CHECK(invoke({"advise", "--alpha-beta", "0.5", "--n", "-1.5"}).code == 2);
    CHECK(invoke({"advise", "--alpha-beta", "0.5"}).code == 2);
}

TEST_CASE("every command is byte-for-byte reproducible") {
    const std::vector<std::vector<std::string>> commands{
        {"simulate", "--r", "3.9", "--length", "50"},
        {"cobweb", "--r", "3.7", "--steps", "25"},
        {"bifurcate", "--r-lo", "3.4", "--r-hi", "3.9", "--steps", "20", "--burn-in", "500", "--samples", "5",
         "--format", "svg"},
        {"lyapunov", "--r", "3.8", "--iterates", "10000"},
        {"liyorke", "--r", "3.9"},
        {"advise", "--alpha-beta", "0.2754", "--n", "-0.0583", "--epsilon", "10"},
        {"estimate", "--input", CHAOSKIT_DATA_DIR "/indicators_synthetic.csv"},
    };
    for (const auto& args : commands) {
        const auto a = invoke(args);
        const auto b = invoke(args);
        CAPTURE(args.front());
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("--output writes a file") {
    const auto path = std::filesystem::temp_directory_path() / "chaoskit_test_liyorke.json";
    std::filesystem::remove(path);
    const auto res = invoke({"liyorke", "--r", "3.9", "--output", path.string()});
    REQUIRE(res.code == 0);
    CHECK(res.out.empty());
    std::ifstream in(path);
    const auto doc = nlohmann::json::parse(in);
    CHECK(doc["holds"] == true);
    std::filesystem::remove(path);

    CHECK(invoke({"liyorke", "--r", "3.9", "--output", "/nonexistent-dir/x.json"}).code == 2);
    CHECK(invoke({"estimate", "--input", "/nonexistent-dir/raw.csv"}).code == 2);
}

TEST_CASE("installed binary wires main to the dispatcher") {
    const std::string bin = CHAOSKIT_BINARY;
    CHECK(std::system((bin + " liyorke --r 4 > /dev/null").c_str()) == 0);
    const int status = std::system((bin + " simulate --r 5 2> /dev/null").c_str());
    CHECK(WEXITSTATUS(status) == 2);
}
