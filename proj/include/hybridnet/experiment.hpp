#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hybridnet/feasibility.hpp"
#include "hybridnet/params.hpp"

namespace hybridnet {

inline constexpr const char* kVersion = "0.1.0";

enum class Experiment { outage, mu_curve, mpt_power, power_outage, feasibility, fig3, fig4, fig5, fig6 };

const char* experiment_name(Experiment e);
Experiment experiment_from_name(const std::string& name);

/// Raised for malformed or unreadable configuration input.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when output files cannot be written.
class OutputError : public std::runtime_error {
public:
    explicit OutputError(const std::string& what) : std::runtime_error(what) {}
};

struct ExperimentConfig {
    Experiment experiment = Experiment::outage;
    SystemParams system;
    DeploymentParams deployment;
    std::uint64_t seed = 0;
    bool seed_set = false; // no implicit entropy: a seed must be provided
    std::uint64_t trials = 0; // 0 -> per-experiment default
    std::string out_dir = ".";
    bool emit_plot = false;
    double truncation_factor = 20.0;

    // Sweep grids; empty -> per-experiment defaults.
    std::vector<double> lambda_b_grid;
    std::vector<double> lambda_p_grid;
    std::vector<double> mu_grid;

    // Region selection for the feasibility/power-outage experiments.
    MptKind mpt = MptKind::isotropic;
    StorageKind storage = StorageKind::large;
    NoiseRegime noise = NoiseRegime::nonzero;

    // Precomputed mu threshold; absent -> estimated from the config seed.
    std::optional<double> mu_value;

    void validate() const;
};

/// Parse a JSON config document. Unknown keys are an error.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

struct RunResult {
    std::string csv_path;
    std::string manifest_path;
    std::string plot_path; // empty unless emit_plot
};

/// Execute the configured experiment: writes the CSV, a run manifest, and
/// optionally a gnuplot script.
RunResult run(const ExperimentConfig& config);

/// Write a standalone gnuplot script next to an existing CSV whose header
/// matches the experiment's schema.
std::string emit_plot_script(const std::string& csv_path, Experiment experiment);

/// Expected CSV header line for an experiment.
const char* csv_schema(Experiment e);

} // namespace hybridnet
