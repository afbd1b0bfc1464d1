#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "pairbound/cli.hpp"
#include "pairbound/report.hpp"

namespace cli = pairbound::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

pairbound::Json run_json(std::vector<std::string> args, int expected = cli::kCertified) {
    args.push_back("--json");
    const Run r = run(args);
    INFO(r.err);
    REQUIRE(r.code == expected);
    return pairbound::Json::parse(r.out);
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "pairbound-cli-test";
    fs::create_directories(dir);
    return dir / name;
}

double lo(const pairbound::Json& x) { return std::stod(x[0].get<std::string>()); }
double hi(const pairbound::Json& x) { return std::stod(x[1].get<std::string>()); }

}  // namespace

TEST_CASE("theta parsing") {
    CHECK(cli::parse_theta("0").contains(0.0));
    CHECK(cli::parse_theta("pi").contains(std::numbers::pi));
    CHECK(cli::parse_theta("pi/2").contains(std::numbers::pi / 2));
    CHECK(cli::parse_theta("3pi/4").contains(3 * std::numbers::pi / 4));
    CHECK(cli::parse_theta("-pi/3").contains(-std::numbers::pi / 3));
    CHECK(cli::parse_theta("2*pi").contains(2 * std::numbers::pi));
    CHECK(cli::parse_theta("0.25").contains(0.25));
    CHECK(cli::parse_theta("pi/2").width() > 0.0);
    CHECK_THROWS_AS(cli::parse_theta("tau"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_theta("pi/0"), std::invalid_argument);
}

TEST_CASE("config file parsing") {
    const fs::path p = scratch("parse.cfg");
    std::ofstream(p) << "# comment\n\nt_max = 20   # trailing\n--step=0.5\n";
    const auto values = cli::read_config_file(p.string());
    CHECK(values.at("t-max") == "20");
    CHECK(values.at("step") == "0.5");
    CHECK(values.size() == 2);

    std::ofstream(p) << "no equals sign\n";
    CHECK_THROWS(cli::read_config_file(p.string()));
    CHECK_THROWS(cli::read_config_file((fs::temp_directory_path() / "pairbound-missing.cfg").string()));
}

TEST_CASE("verify exit codes") {
    const pairbound::Json v = run_json({"verify", "--dim", "1"});
    CHECK(v["status"] == "certified");
    CHECK(lo(v["result"]["J0"]["total"]) > 23.0);
    CHECK(hi(v["result"]["J0"]["total"]) < 37.0);
    CHECK(hi(v["result"]["J_half_pi"]["total"]) < 0.1);
    CHECK(v["config"]["box"]["t_steps"] == 1000);
    CHECK(v["config"]["box"]["r_steps"] == 50);

    const pairbound::Json coarse = run_json({"verify", "--dim", "1", "--step", "5"}, cli::kInconclusive);
    CHECK(coarse["status"] == "inconclusive");

    const Run bad = run({"verify", "--dim", "3"});
    CHECK(bad.code == cli::kError);
    CHECK(bad.err.find("--mode float") != std::string::npos);

    const pairbound::Json f = run_json({"verify", "--dim", "3", "--mode", "float", "--step", "0.5"});
    CHECK(f["status"] == "float");
    CHECK(f["result"]["J0_float"].get<double>() > f["result"]["J_half_pi_float"].get<double>());
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kError);
    CHECK(run({"verify", "--step", "-1"}).code == cli::kError);
    CHECK(run({"verify", "--mode", "fast"}).code == cli::kError);
    CHECK(run({"frobnicate"}).code == cli::kError);
    CHECK(run({"--help"}).code == cli::kCertified);
    const Run v = run({"--version"});
    CHECK(v.code == cli::kCertified);
    CHECK(v.out.find(PAIRBOUND_VERSION) != std::string::npos);
}

TEST_CASE("constants") {
    const pairbound::Json c = run_json({"constants", "--dim", "2"});
    CHECK(lo(c["result"]["kappa_q"]) <= 0.375);
    CHECK(hi(c["result"]["kappa_q"]) >= 0.375);
    CHECK(c["result"]["q"] == "4");
    CHECK(c["result"]["factor_below_two_pow"] == true);
    const pairbound::Json c1 = run_json({"constants", "--dim", "1"});
    CHECK(lo(c1["result"]["kappa_M_closed_form"]) < 9.3485);
    CHECK(hi(c1["result"]["kappa_M_closed_form"]) > 9.3484);
}

TEST_CASE("j and tail subcommands") {
    const pairbound::Json j = run_json({"j", "--dim", "1", "--theta", "0,pi/2", "--step", "0.5"});
    REQUIRE(j["result"].size() == 2);
    CHECK(j["result"][1]["theta"] == "pi/2");
    CHECK(hi(j["result"][1]["main"]) < lo(j["result"][0]["main"]));

    const pairbound::Json t = run_json({"tail", "--dim", "1"});
    CHECK(std::stod(t["result"]["corner_region_only"].get<std::string>()) < 1e-19);
    CHECK(std::stod(t["result"]["complement_cover"].get<std::string>()) < 2e-6);
}

TEST_CASE("phi subcommand") {
    const pairbound::Json p = run_json({"phi", "--dim", "1", "--t", "1"});
    CHECK(p["result"]["intersects_closed_form"] == true);
    const pairbound::Json m = run_json({"phi", "--dim", "2", "--t", "0.5", "--steps", "640", "--grid", "0,0.5,1"});
    CHECK(m["result"]["monotone"]["certified"] == true);
}

TEST_CASE("config file values yield to flags") {
    const fs::path cfg = scratch("verify.cfg");
    std::ofstream(cfg) << "dim = 1\nstep = 5\njson = true\n";
    const Run from_file = run({"verify", "--config", cfg.string()});
    CHECK(from_file.code == cli::kInconclusive);
    const pairbound::Json r = pairbound::Json::parse(from_file.out);
    CHECK(r["config"]["box"]["step"] == 5.0);

    const Run overridden = run({"verify", "--config", cfg.string(), "--step", "0.1"});
    CHECK(overridden.code == cli::kCertified);
}

TEST_CASE("reports go to --output or the output directory") {
    const fs::path file = scratch("out/verify.json");
    fs::remove(file);
    const Run r = run({"verify", "--dim", "1", "--step", "0.5", "--t-max", "10", "--output", file.string()});
    CHECK(fs::exists(file));
    std::ifstream in(file);
    const pairbound::Json j = pairbound::Json::parse(in);
    CHECK(j["command"] == "verify");
    CHECK(j.contains("timing"));
    CHECK(r.out.find("report") != std::string::npos);

    const fs::path dir = scratch("envdir");
    fs::remove_all(dir);
    ::setenv(cli::kOutputDirEnv, dir.string().c_str(), 1);
    run({"constants", "--dim", "1"});
    ::unsetenv(cli::kOutputDirEnv);
    CHECK(fs::exists(dir / "constants-d1.json"));
}

TEST_CASE("reports are deterministic apart from timing") {
    const std::vector<std::string> args = {"verify", "--dim", "2", "--step", "0.5"};
    const pairbound::Json a = run_json(args, cli::kInconclusive);
    const pairbound::Json b = run_json(args, cli::kInconclusive);
    CHECK(pairbound::deterministic_dump(a) == pairbound::deterministic_dump(b));
    CHECK(pairbound::deterministic_dump(a).find("wall_time") == std::string::npos);
}

TEST_CASE("symmetry check subcommand") {
    const pairbound::Json s = run_json({"symmetry", "check", "--seed", "7", "--cases", "20"});
    CHECK(s["status"] == "passed");
    CHECK(run({"symmetry"}).code == cli::kError);
}

TEST_CASE("mean-check and equidistribution subcommands") {
    const pairbound::Json m =
        run_json({"mean-check", "--dim", "1", "--theta-steps", "16", "--step", "0.25", "--r-step", "0.25"});
    CHECK(m["status"] == "consistent");

    const pairbound::Json e = run_json({"equidistribution", "--dim", "1", "--eta", "0,4", "--t-steps", "2048",
                                        "--x-steps", "300"});
    REQUIRE(e["result"]["gaps"].size() == 2);
    CHECK(e["result"]["trend_decreasing"] == true);
}
