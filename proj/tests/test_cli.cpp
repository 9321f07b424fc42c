#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "hybridnet/experiment.hpp"

using namespace hybridnet;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& tag) {
    const fs::path p = fs::temp_directory_path() / ("hybridnet_test_" + tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cli(const std::string& args) {
    const std::string cmd = std::string(HYBRIDNET_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("experiment names round-trip") {
    for (const char* n : {"outage", "mu-curve", "mpt-power", "power-outage", "feasibility",
                          "fig3", "fig4", "fig5", "fig6"})
        CHECK(experiment_name(experiment_from_name(n)) == std::string(n));
    CHECK_THROWS_AS(experiment_from_name("fig7"), ConfigError);
}

TEST_CASE("config parsing") {
    SUBCASE("minimal config with defaults") {
        const auto cfg = parse_config(R"({"experiment":"outage","seed":7})");
        CHECK(cfg.experiment == Experiment::outage);
        CHECK(cfg.seed == 7);
        CHECK(cfg.seed_set);
        CHECK(cfg.system.alpha == 4.0);
        CHECK(cfg.deployment.lambda_b == 1.0);
        cfg.validate();
    }
    SUBCASE("invalid JSON") {
        CHECK_THROWS_AS(parse_config("{nope"), ConfigError);
        CHECK_THROWS_AS(parse_config("[1,2]"), ConfigError);
    }
    SUBCASE("unknown keys are rejected at every level") {
        CHECK_THROWS_AS(parse_config(R"({"seed":1,"bogus":2})"), ConfigError);
        CHECK_THROWS_AS(parse_config(R"({"seed":1,"system":{"gamma":2}})"), ConfigError);
        CHECK_THROWS_AS(parse_config(R"({"seed":1,"deployment":{"power":2}})"), ConfigError);
        CHECK_THROWS_AS(parse_config(R"({"seed":1,"sweep":{"theta":[1]}})"), ConfigError);
    }
    SUBCASE("missing seed fails validation") {
        const auto cfg = parse_config(R"({"experiment":"outage"})");
        CHECK_THROWS_AS(cfg.validate(), ConfigError);
    }
    SUBCASE("dB conversions") {
        const auto cfg = parse_config(
            R"({"seed":1,"system":{"sigma2_db":3,"z_m_db":10},"deployment":{"p_db":0,"q_db":17}})");
        CHECK(cfg.system.sigma2 == doctest::Approx(std::pow(10.0, 0.3)).epsilon(1e-12));
        CHECK(cfg.system.z_m == doctest::Approx(10.0).epsilon(1e-12));
        CHECK(cfg.deployment.p == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(cfg.deployment.q == doctest::Approx(std::pow(10.0, 1.7)).epsilon(1e-12));
    }
    SUBCASE("linear power keys allow p = 0, but not together with dB") {
        const auto cfg = parse_config(R"({"seed":1,"deployment":{"p":0,"q":2.5}})");
        CHECK(cfg.deployment.p == 0.0);
        CHECK(cfg.deployment.q == 2.5);
        CHECK_THROWS_AS(parse_config(R"({"seed":1,"deployment":{"p":1,"p_db":0}})"),
                        ConfigError);
    }
    SUBCASE("sweep grids and region selection") {
        const auto cfg = parse_config(
            R"({"seed":1,"sweep":{"lambda_b":[0.5,1,2],"mode":"directed","storage":"small"}})");
        CHECK(cfg.lambda_b_grid == std::vector<double>{0.5, 1.0, 2.0});
        CHECK(cfg.mpt == MptKind::directed);
        CHECK(cfg.storage == StorageKind::small);
        CHECK_THROWS_AS(parse_config(R"({"seed":1,"sweep":{"mode":"sideways"}})"), ConfigError);
    }
}

TEST_CASE("run: zero-power outage row and reproducibility") {
    const fs::path dir1 = temp_dir("run_a");
    const fs::path dir2 = temp_dir("run_b");
    ExperimentConfig cfg = parse_config(
        R"({"experiment":"outage","seed":11,"trials":200,"deployment":{"p":0},"sweep":{"lambda_b":[1.0]}})");
    cfg.out_dir = dir1.string();
    const RunResult r1 = run(cfg);
    CHECK(fs::exists(r1.csv_path));
    CHECK(fs::exists(r1.manifest_path));
    const std::string csv = slurp(r1.csv_path);
    CHECK(csv.substr(0, csv.find('\n')) == csv_schema(Experiment::outage));
    CHECK(csv.find("1,0,") != std::string::npos); // p_out = 1, stderr = 0

    cfg.out_dir = dir2.string();
    const RunResult r2 = run(cfg);
    CHECK(slurp(r2.csv_path) == csv);

    fs::remove_all(dir1);
    fs::remove_all(dir2);
}

TEST_CASE("run: feasibility writes the boundary schema") {
    const fs::path dir = temp_dir("feas");
    ExperimentConfig cfg = parse_config(
        R"({"experiment":"feasibility","seed":3,"mu":2.5,
            "sweep":{"lambda_b":[0.5,1,2],"mode":"isotropic","storage":"large"}})");
    cfg.out_dir = dir.string();
    const RunResult r = run(cfg);
    const std::string csv = slurp(r.csv_path);
    CHECK(csv.substr(0, csv.find('\n')) == csv_schema(Experiment::feasibility));
    // 3 grid rows plus header.
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    fs::remove_all(dir);
}

TEST_CASE("plot scripts validate the CSV header") {
    const fs::path dir = temp_dir("plot");
    {
        std::ofstream out(dir / "mu_curve.csv");
        out << csv_schema(Experiment::mu_curve) << "\n0,0.1,0.01\n";
    }
    const std::string gp =
        emit_plot_script((dir / "mu_curve.csv").string(), Experiment::mu_curve);
    CHECK(fs::exists(gp));
    CHECK(slurp(gp).find("gnuplot") != std::string::npos);
    CHECK_THROWS_AS(emit_plot_script((dir / "mu_curve.csv").string(), Experiment::fig4),
                    ConfigError);
    CHECK_THROWS_AS(emit_plot_script((dir / "missing.csv").string(), Experiment::mu_curve),
                    OutputError);
    fs::remove_all(dir);
}

TEST_CASE("binary exit codes") {
    const fs::path dir = temp_dir("cli");

    SUBCASE("no subcommand fails") { CHECK(cli("") != 0); }
    SUBCASE("missing seed is a config error") {
        CHECK(cli("outage --trials 10 --out " + dir.string()) == 2);
    }
    SUBCASE("unreadable config file") {
        CHECK(cli("outage --config /does/not/exist.json --seed 1") == 2);
    }
    SUBCASE("invalid parameters") {
        const fs::path bad = dir / "bad.json";
        std::ofstream(bad) << R"({"seed":1,"system":{"alpha":1.0}})";
        CHECK(cli("outage --config " + bad.string() + " --trials 10 --out " + dir.string())
              == 3);
    }
    SUBCASE("unwritable output directory") {
        CHECK(cli("outage --seed 1 --trials 10 --out /proc/cannot/write/here") == 4);
    }
    SUBCASE("reproduce rejects non-figures") {
        CHECK(cli("reproduce outage --seed 1") == 2);
    }
    SUBCASE("a tiny run succeeds end to end") {
        const fs::path cfgp = dir / "ok.json";
        std::ofstream(cfgp)
            << R"({"seed":4,"trials":50,"sweep":{"lambda_b":[1.0]},"deployment":{"p":0}})";
        CHECK(cli("outage --config " + cfgp.string() + " --out " + dir.string()
                  + " --emit-plot")
              == 0);
        CHECK(fs::exists(dir / "outage.csv"));
        CHECK(fs::exists(dir / "outage.manifest.json"));
        CHECK(fs::exists(dir / "outage.csv.gp"));
    }
    fs::remove_all(dir);
}
