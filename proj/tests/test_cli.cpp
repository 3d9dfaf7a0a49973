#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "pdm/cli.hpp"

using namespace pdm;

namespace {

std::string run_binary(const std::string& args, int expected_exit, const std::string& tag) {
    const std::string out_path = std::string("cli_out_") + tag + ".txt";
    const std::string cmd =
        std::string(PDM_CLI_PATH) + " " + args + " > " + out_path + " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == expected_exit);
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("RunConfig JSON round trip") {
    RunConfig cfg;
    cfg.command = "coherent";
    cfg.family = "singular_n";
    cfg.n = 3;
    cfg.x0 = 0.5;
    cfg.lambda = 1.0;
    cfg.potential = "squeezed";
    cfg.levels = 7;
    cfg.level = 2;
    cfg.grid_points = 3001;
    cfg.ymax_margin = 18.0;
    cfg.method = "numerov";
    cfg.direction = "raise";
    cfg.times = 2;
    cfg.z_re = 1.25;
    cfg.z_im = -0.5;
    cfg.format = "json";
    cfg.out = "somewhere.csv";
    const RunConfig back = config_from_json(config_to_json(cfg));
    CHECK(back == cfg);

    // defaults survive a partial document
    const RunConfig sparse = config_from_json(nlohmann::json{{"command", "catalog"}});
    CHECK(sparse.command == "catalog");
    CHECK(sparse.family == "constant");
    CHECK(sparse.levels == 10);
}

TEST_CASE("spectrum command: first-kind pairing emits the equidistant ladder") {
    const std::string out =
        run_binary("spectrum --family regular --potential harmonic --levels 10", 0, "spec");
    CHECK(out.rfind("k,E\n0,0.5\n1,1.5\n", 0) == 0);
    CHECK(out.find("9,9.5\n") != std::string::npos);
}

TEST_CASE("spectrum command: wkb method reports turning points") {
    const std::string out =
        run_binary("spectrum --potential sinh2 --method wkb --levels 2", 0, "wkb");
    CHECK(out.rfind("k,E_wkb,y_turn\n", 0) == 0);
    CHECK(out.find("0,0.556440015,") != std::string::npos);
}

TEST_CASE("wkb-compare reproduces the reference table within documented tolerances") {
    const std::string table = run_binary("wkb-compare --potential sinh2 --levels 10", 0, "cmp");
    const double wkb_ref[10] = {0.55644, 1.94482, 3.62813, 5.56179, 7.71941,
                                10.08292, 12.63890, 15.37683, 18.28821, 21.36592};
    const double sch_ref[10] = {0.60571, 1.98368, 3.66250, 5.59365, 7.74948,
                                10.11165, 12.66657, 15.40365, 18.31431, 21.39141};
    std::istringstream is(table);
    std::string line;
    std::getline(is, line);
    CHECK(line == "k,E_wkb,E_schrodinger");
    for (int k = 0; k < 10; ++k) {
        REQUIRE(std::getline(is, line));
        std::istringstream ls(line);
        std::string cell;
        std::getline(ls, cell, ',');
        CHECK(std::stoi(cell) == k);
        std::getline(ls, cell, ',');
        CHECK(std::abs(std::stod(cell) - wkb_ref[k]) < 5e-5);
        std::getline(ls, cell, ',');
        CHECK(std::abs(std::stod(cell) - sch_ref[k]) < 1e-3);
    }
}

TEST_CASE("wkb-compare output matches the golden file byte for byte") {
    const std::string out = run_binary("wkb-compare --potential sinh2 --levels 10", 0, "golden");
    const std::string golden = slurp(std::string(PDM_GOLDEN_DIR) + "/table2_wkb_compare.csv");
    CHECK(out == golden);
    // determinism: a second run is byte-identical
    const std::string again = run_binary("wkb-compare --potential sinh2 --levels 10", 0, "again");
    CHECK(again == out);
}

TEST_CASE("coherent command emits moments as JSON") {
    const std::string out = run_binary("coherent --family regular --z 1,0", 0, "coh");
    const nlohmann::json j = nlohmann::json::parse(out);
    CHECK(j["mean_energy"].get<double>() == Catch::Approx(2.0));
    CHECK(j["stddev_energy"].get<double>() == Catch::Approx(M_SQRT2));
    CHECK(j["uncertainty_product"].get<double>() == Catch::Approx(0.5).margin(1e-4));
    CHECK(j["poisson"].size() >= 20);
}

TEST_CASE("ladder command reports the lowering coefficient") {
    const std::string out =
        run_binary("ladder --family regular --level 3 --direction lower --times 1 --format json",
                   0, "lad");
    const nlohmann::json j = nlohmann::json::parse(out);
    CHECK(j["coefficients"][0].get<double>() == Catch::Approx(std::sqrt(6.0)).margin(1e-5));
}

TEST_CASE("catalog command emits parseable JSON") {
    const std::string out = run_binary("catalog", 0, "cat");
    const nlohmann::json j = nlohmann::json::parse(out);
    CHECK(j.is_array());
    CHECK(j.size() == 8);
    CHECK(j[0]["family"]["kind"] == "constant");
}

TEST_CASE("invalid pairings exit with the domain-error code") {
    run_binary("second-kind --family singular0 --x0 1 --potential harmonic", 2, "err");
    run_binary("spectrum --potential nosuch", 2, "err2");
    run_binary("nosuchcommand", 2, "err3");
}

TEST_CASE("config file provides defaults and flags override") {
    {
        std::ofstream cfg("cli_cfg.json");
        cfg << config_to_json([] {
                   RunConfig c;
                   c.command = "spectrum";
                   c.family = "regular";
                   c.potential = "harmonic";
                   c.levels = 3;
                   return c;
               }())
                   .dump(2);
    }
    const std::string out = run_binary("spectrum --config cli_cfg.json", 0, "cfg");
    CHECK(out == "k,E\n0,0.5\n1,1.5\n2,2.5\n");
    const std::string overridden =
        run_binary("spectrum --config cli_cfg.json --levels 1", 0, "cfg2");
    CHECK(overridden == "k,E\n0,0.5\n");
}

TEST_CASE("run() writes artifacts to --out deterministically") {
    RunConfig cfg;
    cfg.command = "first-kind";
    cfg.family = "singular_n";
    cfg.n = 1;
    cfg.levels = 3;
    cfg.grid_points = 401;
    cfg.out = "cli_first_kind.csv";
    REQUIRE(run(cfg) == 0);
    const std::string spectrum = slurp("cli_first_kind.csv");
    CHECK(spectrum == "k,E\n0,0.5\n1,1.5\n2,2.5\n");
    const std::string waves = slurp("cli_first_kind.csv.waves.csv");
    CHECK(waves.rfind("x,psi_0,psi_1,psi_2\n", 0) == 0);
    REQUIRE(run(cfg) == 0);
    CHECK(slurp("cli_first_kind.csv.waves.csv") == waves);
}
