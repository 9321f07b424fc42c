// Command-line front end: runs one experiment and writes its CSV, manifest,
// and (optionally) a gnuplot script into the output directory.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hybridnet/experiment.hpp"

namespace {

// Exit codes: 0 ok, 2 unreadable/invalid config, 3 invalid parameters,
// 4 unwritable output, 5 simulation failure.
constexpr int kExitConfig = 2;
constexpr int kExitParams = 3;
constexpr int kExitOutput = 4;
constexpr int kExitRuntime = 5;

struct CommonArgs {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<std::string> out_dir;
    bool emit_plot = false;
};

void add_common(CLI::App* sub, CommonArgs& args) {
    sub->add_option("--config", args.config_path, "JSON config file");
    sub->add_option("--seed", args.seed, "master RNG seed (required here or in the config)");
    sub->add_option("--trials", args.trials, "Monte Carlo trials per estimate");
    sub->add_option("--out", args.out_dir, "output directory");
    sub->add_flag("--emit-plot", args.emit_plot, "also write a gnuplot script");
}

int run_experiment(hybridnet::Experiment experiment, const CommonArgs& args) {
    using namespace hybridnet;
    ExperimentConfig cfg;
    try {
        if (!args.config_path.empty()) cfg = load_config(args.config_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    cfg.experiment = experiment;
    if (args.seed) {
        cfg.seed = *args.seed;
        cfg.seed_set = true;
    }
    if (args.trials) cfg.trials = *args.trials;
    if (args.out_dir) cfg.out_dir = *args.out_dir;
    if (args.emit_plot) cfg.emit_plot = true;

    try {
        const RunResult result = run(cfg);
        std::cout << "wrote " << result.csv_path << "\n";
        std::cout << "wrote " << result.manifest_path << "\n";
        if (!result.plot_path.empty()) std::cout << "wrote " << result.plot_path << "\n";
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const OutputError& e) {
        std::cerr << "output error: " << e.what() << "\n";
        return kExitOutput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitParams;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hybridnet: cellular uplink with wireless power beacons"};
    app.set_version_flag("--version", hybridnet::kVersion);
    app.require_subcommand(1);

    struct SubSpec {
        const char* name;
        const char* help;
        hybridnet::Experiment experiment;
    };
    const SubSpec subs[] = {
        {"outage", "SINR outage probability over a BS density sweep",
         hybridnet::Experiment::outage},
        {"mu-curve", "epsilon(mu) outage curve at unit density", hybridnet::Experiment::mu_curve},
        {"mpt-power", "received MPT power vs beacon density", hybridnet::Experiment::mpt_power},
        {"power-outage", "power outage probability with its nearest-beacon bound",
         hybridnet::Experiment::power_outage},
        {"feasibility", "trace a deployment feasibility boundary",
         hybridnet::Experiment::feasibility},
    };

    CommonArgs args[6];
    hybridnet::Experiment resolved[6];
    CLI::App* handles[6];
    int n = 0;
    for (const SubSpec& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        add_common(sub, args[n]);
        resolved[n] = s.experiment;
        handles[n] = sub;
        ++n;
    }

    CLI::App* repro = app.add_subcommand("reproduce", "regenerate a paper figure dataset");
    std::string figure;
    repro->add_option("figure", figure, "one of fig3, fig4, fig5, fig6")->required();
    CommonArgs repro_args;
    add_common(repro, repro_args);

    CLI11_PARSE(app, argc, argv);

    if (repro->parsed()) {
        hybridnet::Experiment e;
        try {
            e = hybridnet::experiment_from_name(figure);
        } catch (const hybridnet::ConfigError& err) {
            std::cerr << "config error: " << err.what() << "\n";
            return kExitConfig;
        }
        if (e != hybridnet::Experiment::fig3 && e != hybridnet::Experiment::fig4
            && e != hybridnet::Experiment::fig5 && e != hybridnet::Experiment::fig6) {
            std::cerr << "config error: reproduce expects fig3..fig6\n";
            return kExitConfig;
        }
        return run_experiment(e, repro_args);
    }
    for (int i = 0; i < n; ++i)
        if (handles[i]->parsed()) return run_experiment(resolved[i], args[i]);
    return kExitConfig;
}
