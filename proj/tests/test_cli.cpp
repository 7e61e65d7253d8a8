#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "qreal/serialize.hpp"

using namespace qreal;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

TruncatedLaurentSeries golden(const std::string& name) {
    return read_series_file(std::string(QREAL_GOLDEN_DIR) + "/" + name + ".json");
}

}  // namespace

TEST_CASE("qrat") {
    const auto r = run({"qrat", "5/3"});
    CHECK(r.code == 0);
    CHECK(r.out == "(1+q+2q^2+q^3)/(1+q+q^2)\n");
    CHECK(run({"qrat", "4"}).out == "1+q+q^2+q^3\n");
    const auto j = nlohmann::json::parse(run({"qrat", "5/3", "--json", "--expand", "12"}).out);
    CHECK(j["schema"] == "qreal-lab/1");
    CHECK(j["cf_even"] == nlohmann::json::array({"1", "1", "1", "1"}));
    CHECK(series_from_json(j["expansion"]).to_string() == "1 + q^2 - q^4 + q^5 - q^7 + q^8 - q^10 + q^11 + O(q^12)");
}

TEST_CASE("cubic json for the heptagon") {
    const auto r = run({"cubic", "--family", "plus", "--b", "-1", "--order", "31", "--check-vieta", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "qreal-lab/1");
    REQUIRE(j["roots"].size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(series_from_json(j["roots"][static_cast<std::size_t>(i)]["series"]) == golden("heptagon_x" + std::to_string(i + 1)));
    }
    CHECK(j["vieta"]["vanish"] == true);
    CHECK(series_from_json(j["vieta"]["product_residual"]).is_zero());
    CHECK(series_from_json(j["vieta"]["pairs_residual"]).is_zero());

    // identical output on a second run
    CHECK(run({"cubic", "--family", "plus", "--b", "-1", "--order", "31", "--check-vieta", "--json"}).out == r.out);
}

TEST_CASE("bseries and csv output") {
    const auto r = run({"bseries", "--family", "minus", "--b", "0", "--order", "31", "--route", "defect", "--root-index", "2", "--json"});
    REQUIRE(r.code == 0);
    CHECK(series_from_json(nlohmann::json::parse(r.out)["series"]) == golden("nonagon_bminus"));

    const auto csv = run({"cubic", "--family", "minus", "--b", "0", "--order", "4", "--csv"});
    CHECK(csv.out.rfind("exponent,X1,X2,X3\n", 0) == 0);
}

TEST_CASE("work order from the environment does not change results") {
    const auto base = run({"bseries", "--family", "plus", "--b", "-1", "--order", "20"});
    setenv("QREAL_WORK_ORDER", "45", 1);
    const auto raised = run({"bseries", "--family", "plus", "--b", "-1", "--order", "20"});
    setenv("QREAL_WORK_ORDER", "x", 1);
    const auto bad = run({"bseries", "--family", "plus", "--b", "-1", "--order", "20"});
    unsetenv("QREAL_WORK_ORDER");
    CHECK(base.code == 0);
    CHECK(raised.out == base.out);
    CHECK(bad.code == 2);
}

TEST_CASE("ctable and figdata") {
    const std::string bplus = std::string(QREAL_GOLDEN_DIR) + "/heptagon_bplus.json";
    const auto r = run({"ctable", "--series", bplus, "--lmax", "12", "--mmax", "12", "--csv"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    std::getline(lines, line);
    CHECK(line.rfind("-1,-2,2,-1,1,0,1,0,-2,0,-2,5,1", 0) == 0);

    const auto fig = run({"figdata", "--series", bplus, "--points", "2"});
    CHECK(fig.out == "k,coeff,signedlog\n1,-1,0\n2,-2,-0.693147\n");

    const auto shallow = run({"ctable", "--series", bplus, "--lmax", "30", "--mmax", "30"});
    CHECK(shallow.code == 1);
    CHECK(shallow.err.find("insufficient series order") != std::string::npos);
}

TEST_CASE("errors and exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"qrat"}).code == 2);
    CHECK(run({"qrat", "5/0"}).code == 2);
    CHECK(run({"qreal", "--cf", "1", "--repeat", "1", "--bogus"}).code == 2);
    CHECK(run({"cubic", "--family", "plus", "--b", "-1", "--order", "0"}).code == 2);
    const auto budget = run({"qreal", "--minpoly", "1,1,-2,-1", "--interval", "1,2", "--budget", "3"});
    CHECK(budget.code == 1);
    const auto err = nlohmann::json::parse(budget.err);
    CHECK(err["error"] == "stabilization not reached");
    CHECK(run({"qreal", "--minpoly", "1,0,-2", "--interval", "-2,2"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("quad and word") {
    const auto j = nlohmann::json::parse(run({"quad", "--minpoly", "1,-1,-1", "--interval", "1,2", "--json"}).out);
    CHECK(j["Q"] == "-1+q+q^2");
    CHECK(j["R"] == "1+2q-q^2+2q^3+q^4");
    CHECK(j["S"] == "2q");
    CHECK(j["fixing_matrix"] == "[[2, 1], [1, 1]]");
    CHECK(j["R_palindromic"] == true);

    const auto w = run({"word", "--word", "TSTSTS"});
    CHECK(w.out.find("reduced (empty)") != std::string::npos);
    CHECK(run({"word", "--braid", "1 2 1 2 1 2"}).out == "burau [[-q^3, 0], [0, -q^3]]\n");
}

TEST_CASE("verify-all reports every criterion") {
    const auto dir = std::filesystem::temp_directory_path() / "qreal_lab_regen";
    std::filesystem::remove_all(dir);
    const auto r = run({"verify-all", "--write", dir.string()});
    int lines = 0;
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line)) lines += line.rfind("PASS ", 0) == 0 || line.rfind("FAIL ", 0) == 0;
    CHECK(lines == 10);
    CHECK(r.out.find("evidence B+: no zero block") != std::string::npos);
    CHECK(r.out.find("evidence B-: no zero block") != std::string::npos);
    // The only departure from the printed data is the C(2/3) sign in the [5/3]_q table.
    CHECK(r.out.find("FAIL  5") != std::string::npos);
    CHECK(r.out.find("1 differences") != std::string::npos);
    CHECK(r.out.find("q5over3_ctable.csv: row 4 column 3 is -2, pinned 2") != std::string::npos);
    CHECK(r.code == 1);
    std::filesystem::remove_all(dir);
}
