#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "cli_app.hpp"
#include "mdinf/bounds.hpp"
#include "mdinf/model.hpp"
#include "mdinf/series.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = mdinf::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    return cells;
}

}  // namespace

TEST_CASE("moments prints the variation coefficient") {
    const auto r = run_cli({"moments", "--lambda", "1", "--alpha", "0.5"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.find("0.406558822") != std::string::npos);
    CHECK(r.out.find("variation_coeff") != std::string::npos);
    CHECK(r.out.find("mean") != std::string::npos);
}

TEST_CASE("pretty digits knob") {
    const auto r = run_cli({"moments", "--lambda", "1", "--alpha", "0.5", "--digits", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0.4066") != std::string::npos);
    CHECK(r.out.find("0.40655") == std::string::npos);
}

TEST_CASE("small rho leaves the shape coefficients blank") {
    const auto r = run_cli({"moments", "--lambda", "1e-5", "--alpha", "0.01"});
    CHECK(r.code == 0);
    CHECK(r.out.find("beta1") != std::string::npos);
}

TEST_CASE("csv output round-trips bitwise") {
    const auto r = run_cli({"cdf", "--lambda", "1", "--alpha", "1", "--t", "2.5",
                            "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "lambda,alpha,t,series,series_band_up,terms");
    const auto cells = split_csv(ls[1]);
    REQUIRE(cells.size() == 6);
    const auto p = mdinf::make_params(1.0, 1.0);
    const auto expect = mdinf::series::busy_cdf(p, 2.5, mdinf::series::kDefaultTol);
    CHECK(std::strtod(cells[3].c_str(), nullptr) == expect.value);
    CHECK(std::strtod(cells[2].c_str(), nullptr) == 2.5);
    CHECK(cells[5] == std::to_string(expect.terms_used));
}

TEST_CASE("json lines round-trip bitwise") {
    const auto r = run_cli({"cdf", "--lambda", "2", "--alpha", "1.5", "--t", "3",
                            "--format", "json-lines"});
    REQUIRE(r.code == 0);
    const auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 1);
    const auto rec = nlohmann::json::parse(ls[0]);
    CHECK(rec.at("schema") == "cdf");
    const auto p = mdinf::make_params(2.0, 1.5);
    const auto expect = mdinf::series::busy_cdf(p, 3.0, mdinf::series::kDefaultTol);
    CHECK(rec.at("series").get<double>() == expect.value);
    CHECK(rec.at("t").get<double>() == 3.0);
}

TEST_CASE("multiple evaluation points via comma list") {
    const auto r = run_cli({"cdf", "--t", "1,2,3", "--format", "json-lines"});
    REQUIRE(r.code == 0);
    const auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 3);
    CHECK(nlohmann::json::parse(ls[0]).at("t").get<double>() == 1.0);
    CHECK(nlohmann::json::parse(ls[2]).at("t").get<double>() == 3.0);
    // below the support the distribution is exactly zero
    const auto r0 = run_cli({"cdf", "--t", "0.5", "--format", "json-lines"});
    CHECK(nlohmann::json::parse(r0.out).at("series").get<double>() == 0.0);
}

TEST_CASE("combined method cross-checks itself") {
    const auto r = run_cli({"cdf", "--t", "2", "--method", "all", "--format", "json-lines"});
    REQUIRE(r.code == 0);
    const auto rec = nlohmann::json::parse(lines_of(r.out).at(0));
    CHECK(rec.at("violation").get<bool>() == false);
    CHECK(rec.at("series").is_number());
    CHECK(rec.at("pab").is_number());
    CHECK(rec.at("chebyshev_lower").is_number());
    const double series = rec.at("series").get<double>();
    const double pab = rec.at("pab").get<double>();
    const double down = rec.at("band_down").get<double>();
    const double up = rec.at("band_up").get<double>();
    CHECK(series >= pab - down - 1e-9);
    CHECK(series <= pab + up + 1e-9);
}

TEST_CASE("tail estimate below the support is exactly zero") {
    const auto r = run_cli({"cdf", "--t", "0.25", "--method", "pab", "--format", "json-lines"});
    REQUIRE(r.code == 0);
    const auto rec = nlohmann::json::parse(lines_of(r.out).at(0));
    CHECK(rec.at("pab").get<double>() == 0.0);
    CHECK(rec.at("band_down").get<double>() == 0.0);
    CHECK(rec.at("band_up").get<double>() == 0.0);
}

TEST_CASE("tables render byte-identically across runs") {
    for (const char* which : {"1", "2", "3", "4"}) {
        for (const char* fmt : {"csv", "pretty"}) {
            const auto a = run_cli({"table", which, "--format", fmt});
            const auto b = run_cli({"table", which, "--format", fmt});
            CHECK(a.code == 0);
            CHECK(a.out == b.out);
            CHECK(!a.out.empty());
        }
    }
}

TEST_CASE("table 4 rows carry the exact bound values") {
    const auto r = run_cli({"table", "4", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto ls = lines_of(r.out);
    // header + 29 rows + summary header + 3 summary rows
    REQUIRE(ls.size() == 34);
    const auto header = split_csv(ls[0]);
    REQUIRE(header.size() == 9);
    CHECK(header[6] == "chebyshev_lower");
    // first row of the third block: alpha = 3, t = 4
    const auto row = split_csv(ls[9]);
    CHECK(std::strtod(row[4].c_str(), nullptr) == 4.0);
    const auto p = mdinf::make_params(1.0, 3.0);
    CHECK(std::strtod(row[6].c_str(), nullptr) == mdinf::bounds::chebyshev_lower(p, 4.0).value);
    CHECK(std::strtod(row[7].c_str(), nullptr) == mdinf::bounds::envelope(p, 4.0).first);
}

TEST_CASE("simulation summary") {
    const auto r = run_cli({"simulate", "--n", "5000", "--seed", "7", "--format", "json-lines"});
    REQUIRE(r.code == 0);
    const auto rec = nlohmann::json::parse(lines_of(r.out).at(0));
    CHECK(rec.at("n").get<long long>() == 5000);
    CHECK(rec.at("min").get<double>() == 1.0);
    CHECK(rec.at("atom_expected").get<double>() == std::exp(-1.0));
    CHECK(std::fabs(rec.at("atom_fraction").get<double>() - std::exp(-1.0)) < 0.03);
    // identical seed, identical summary
    const auto r2 = run_cli({"simulate", "--n", "5000", "--seed", "7", "--format", "json-lines"});
    CHECK(r2.out == r.out);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({}).code == 2);                                        // no subcommand
    CHECK(run_cli({"moments", "--lambda", "-1"}).code == 2);             // bad parameter
    CHECK(run_cli({"moments", "--lambda", "0"}).code == 2);
    CHECK(run_cli({"moments", "--max-order", "12"}).code == 2);          // digit-loss guard
    CHECK(run_cli({"moments", "--max-order", "500"}).code == 2);         // option range
    CHECK(run_cli({"cdf", "--t", "1", "--format", "xml"}).code == 2);    // unknown format
    CHECK(run_cli({"cdf", "--t", "1", "--tol", "0"}).code == 2);
    CHECK(run_cli({"moments", "--lambda", "200"}).code == 3);            // moment overflow
    CHECK(run_cli({"simulate", "--n", "0"}).code == 2);
    CHECK(run_cli({"simulate", "--n", "600000000"}).code == 4);          // sample budget
    CHECK(run_cli({"cdf", "--lambda", "15", "--t", "20"}).code == 4);    // series term budget
    CHECK(run_cli({"table", "9"}).code == 2);
    const auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("moments") != std::string::npos);
    // errors land on the error stream, not stdout
    const auto bad = run_cli({"moments", "--lambda", "-1"});
    CHECK(bad.out.empty());
    CHECK(!bad.err.empty());
}

TEST_CASE("allow-unstable opens higher orders") {
    const auto r = run_cli({"moments", "--max-order", "12", "--allow-unstable",
                            "--format", "json-lines"});
    CHECK(r.code == 0);
    const auto rec = nlohmann::json::parse(lines_of(r.out).at(0));
    CHECK(rec.contains("m12"));
}
