#include "hybridnet/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hybridnet/analytic.hpp"
#include "hybridnet/montecarlo.hpp"

namespace hybridnet {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct NameEntry {
    Experiment e;
    const char* name;
};

constexpr NameEntry kNames[] = {
    {Experiment::outage, "outage"},         {Experiment::mu_curve, "mu-curve"},
    {Experiment::mpt_power, "mpt-power"},   {Experiment::power_outage, "power-outage"},
    {Experiment::feasibility, "feasibility"}, {Experiment::fig3, "fig3"},
    {Experiment::fig4, "fig4"},             {Experiment::fig5, "fig5"},
    {Experiment::fig6, "fig6"},
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i)
        v.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    return v;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i)
        v.push_back(lo + (hi - lo) * static_cast<double>(i) / (n - 1));
    return v;
}

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw ConfigError("unknown key '" + key + "' in " + where);
    }
}

double get_num(const json& obj, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) throw ConfigError(std::string("key '") + key + "' must be a number");
    return obj[key].get<double>();
}

std::vector<double> get_vec(const json& obj, const char* key) {
    std::vector<double> v;
    if (!obj.contains(key)) return v;
    if (!obj[key].is_array()) throw ConfigError(std::string("key '") + key + "' must be an array");
    for (const auto& x : obj[key]) v.push_back(x.get<double>());
    return v;
}

MptKind mpt_from_name(const std::string& s) {
    if (s == "isotropic") return MptKind::isotropic;
    if (s == "directed") return MptKind::directed;
    if (s == "none") return MptKind::none;
    throw ConfigError("unknown mpt mode '" + s + "'");
}

StorageKind storage_from_name(const std::string& s) {
    if (s == "large") return StorageKind::large;
    if (s == "small") return StorageKind::small;
    throw ConfigError("unknown storage kind '" + s + "'");
}

NoiseRegime noise_from_name(const std::string& s) {
    if (s == "nonzero") return NoiseRegime::nonzero;
    if (s == "interference_limited") return NoiseRegime::interference_limited;
    throw ConfigError("unknown noise regime '" + s + "'");
}

const char* mpt_name(MptKind m) {
    switch (m) {
        case MptKind::none: return "none";
        case MptKind::isotropic: return "isotropic";
        case MptKind::directed: return "directed";
    }
    return "?";
}

const char* storage_name(StorageKind s) {
    return s == StorageKind::large ? "large" : "small";
}

class CsvWriter {
public:
    CsvWriter(const fs::path& path, const char* header) : path_(path) {
        out_.open(path);
        if (!out_) throw OutputError("cannot open output file " + path.string());
        out_ << header << "\n";
    }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ",";
            out_ << cells[i];
        }
        out_ << "\n";
    }

    void close() {
        out_.close();
        if (out_.fail()) throw OutputError("failed writing " + path_.string());
    }

private:
    fs::path path_;
    std::ofstream out_;
};

std::uint64_t default_trials(Experiment e) {
    switch (e) {
        case Experiment::mu_curve:
        case Experiment::fig3:
        case Experiment::fig4: return 200000;
        case Experiment::mpt_power:
        case Experiment::fig5: return 20000;
        case Experiment::fig6: return 4000;
        default: return 100000;
    }
}

// Resolve the mu threshold for experiments that need one.
double resolve_mu(const ExperimentConfig& cfg, std::uint64_t trials, json& manifest) {
    if (cfg.mu_value) {
        manifest["mu_source"] = "config";
        manifest["mu_value"] = *cfg.mu_value;
        return *cfg.mu_value;
    }
    const MuEstimate mu =
        estimate_mu(cfg.system, cfg.system.epsilon, trials, cfg.seed, {cfg.truncation_factor});
    manifest["mu_source"] = "monte_carlo";
    manifest["mu_value"] = mu.mu;
    manifest["mu_ci"] = {mu.ci_lo, mu.ci_hi};
    manifest["mu_trials"] = mu.trials;
    return mu.mu;
}

} // namespace

const char* experiment_name(Experiment e) {
    for (const auto& n : kNames)
        if (n.e == e) return n.name;
    return "?";
}

Experiment experiment_from_name(const std::string& name) {
    for (const auto& n : kNames)
        if (name == n.name) return n.e;
    throw ConfigError("unknown experiment '" + name + "'");
}

const char* csv_schema(Experiment e) {
    switch (e) {
        case Experiment::outage: return "lambda_b,p,q,lambda_p,p_out,stderr";
        case Experiment::mu_curve:
        case Experiment::fig3: return "mu,epsilon,stderr";
        case Experiment::fig4: return "lambda_b,min_p_noise,min_p_intlim";
        case Experiment::mpt_power:
        case Experiment::fig5: return "lambda_p,p_iso_large,p_dir_large,p_iso_small,p_dir_small";
        case Experiment::fig6: return "lambda_b,min_lambda_p_sim,min_lambda_p_bound,mode,storage";
        case Experiment::power_outage: return "lambda_p,q,p_t,mode,p_out,stderr,bound";
        case Experiment::feasibility: return "lambda_b,min_co_param,infeasible";
    }
    return "";
}

void ExperimentConfig::validate() const {
    system.validate();
    deployment.validate();
    if (!seed_set) throw ConfigError("a seed is required (config key 'seed' or --seed)");
    if (!(truncation_factor >= 10.0))
        throw ConfigError("truncation_factor must be >= 10");
}

ExperimentConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    check_keys(doc, "config",
               {"experiment", "seed", "trials", "out", "emit_plot", "truncation_factor",
                "system", "deployment", "sweep", "mu"});

    ExperimentConfig cfg;
    if (doc.contains("experiment"))
        cfg.experiment = experiment_from_name(doc["experiment"].get<std::string>());
    if (doc.contains("seed")) {
        cfg.seed = doc["seed"].get<std::uint64_t>();
        cfg.seed_set = true;
    }
    if (doc.contains("trials")) cfg.trials = doc["trials"].get<std::uint64_t>();
    if (doc.contains("out")) cfg.out_dir = doc["out"].get<std::string>();
    if (doc.contains("emit_plot")) cfg.emit_plot = doc["emit_plot"].get<bool>();
    cfg.truncation_factor = get_num(doc, "truncation_factor", cfg.truncation_factor);
    if (doc.contains("mu")) cfg.mu_value = doc["mu"].get<double>();

    if (doc.contains("system")) {
        const json& s = doc["system"];
        check_keys(s, "system",
                   {"alpha", "beta", "nu", "theta", "omega", "K", "epsilon", "eta", "delta",
                    "sigma2_db", "z_m_db", "z_s_db", "p_b_db", "p_t_db"});
        SystemParams& sp = cfg.system;
        sp.alpha = get_num(s, "alpha", sp.alpha);
        sp.beta = get_num(s, "beta", sp.beta);
        sp.nu = get_num(s, "nu", sp.nu);
        sp.theta = get_num(s, "theta", sp.theta);
        sp.omega = get_num(s, "omega", sp.omega);
        if (s.contains("K")) sp.K = s["K"].get<int>();
        sp.epsilon = get_num(s, "epsilon", sp.epsilon);
        sp.eta = get_num(s, "eta", sp.eta);
        sp.delta = get_num(s, "delta", sp.delta);
        if (s.contains("sigma2_db")) sp.sigma2 = db_to_linear(s["sigma2_db"].get<double>());
        if (s.contains("z_m_db")) sp.z_m = db_to_linear(s["z_m_db"].get<double>());
        if (s.contains("z_s_db")) sp.z_s = db_to_linear(s["z_s_db"].get<double>());
        if (s.contains("p_b_db")) sp.p_b = db_to_linear(s["p_b_db"].get<double>());
        if (s.contains("p_t_db")) sp.p_t = db_to_linear(s["p_t_db"].get<double>());
    }
    if (doc.contains("deployment")) {
        const json& d = doc["deployment"];
        check_keys(d, "deployment", {"p", "q", "p_db", "q_db", "lambda_b", "lambda_p"});
        // Powers are dB by convention; plain 'p'/'q' take linear values
        // (zero power has no dB representation).
        if (d.contains("p") && d.contains("p_db"))
            throw ConfigError("give either 'p' or 'p_db', not both");
        if (d.contains("q") && d.contains("q_db"))
            throw ConfigError("give either 'q' or 'q_db', not both");
        cfg.deployment.p = get_num(d, "p", cfg.deployment.p);
        cfg.deployment.q = get_num(d, "q", cfg.deployment.q);
        if (d.contains("p_db")) cfg.deployment.p = db_to_linear(d["p_db"].get<double>());
        if (d.contains("q_db")) cfg.deployment.q = db_to_linear(d["q_db"].get<double>());
        cfg.deployment.lambda_b = get_num(d, "lambda_b", cfg.deployment.lambda_b);
        cfg.deployment.lambda_p = get_num(d, "lambda_p", cfg.deployment.lambda_p);
    }
    if (doc.contains("sweep")) {
        const json& s = doc["sweep"];
        check_keys(s, "sweep", {"lambda_b", "lambda_p", "mu", "mode", "storage", "noise"});
        cfg.lambda_b_grid = get_vec(s, "lambda_b");
        cfg.lambda_p_grid = get_vec(s, "lambda_p");
        cfg.mu_grid = get_vec(s, "mu");
        if (s.contains("mode")) cfg.mpt = mpt_from_name(s["mode"].get<std::string>());
        if (s.contains("storage"))
            cfg.storage = storage_from_name(s["storage"].get<std::string>());
        if (s.contains("noise")) cfg.noise = noise_from_name(s["noise"].get<std::string>());
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

namespace {

void run_outage(const ExperimentConfig& cfg, std::uint64_t trials, CsvWriter& csv, json& manifest) {
    std::vector<double> grid = cfg.lambda_b_grid;
    if (grid.empty()) grid = {cfg.deployment.lambda_b};
    manifest["lambda_b_grid"] = grid;
    std::uint64_t row = 0;
    for (double lb : grid) {
        DeploymentParams d = cfg.deployment;
        d.lambda_b = lb;
        const Estimate e =
            estimate_outage(cfg.system, d, trials, cfg.seed + row, {cfg.truncation_factor});
        csv.row({fmt(lb), fmt(d.p), fmt(d.q), fmt(d.lambda_p), fmt(e.value), fmt(e.stderr_)});
        ++row;
    }
}

void run_mu_curve(const ExperimentConfig& cfg, std::uint64_t trials, CsvWriter& csv,
                  json& manifest) {
    std::vector<double> grid = cfg.mu_grid;
    if (grid.empty()) grid = linspace(0.0, 15.0, 61);
    manifest["mu_grid"] = {grid.front(), grid.back(), grid.size()};
    const std::vector<double> s =
        sample_mu_statistic(cfg.system, trials, cfg.seed, {cfg.truncation_factor});
    for (double mu : grid) {
        const Estimate e = epsilon_at_mu(s, mu);
        csv.row({fmt(mu), fmt(e.value), fmt(e.stderr_)});
    }
}

void run_fig4(const ExperimentConfig& cfg, std::uint64_t trials, CsvWriter& csv, json& manifest) {
    std::vector<double> grid = cfg.lambda_b_grid;
    if (grid.empty()) grid = logspace(0.1, 10.0, 25);
    manifest["lambda_b_grid"] = {grid.front(), grid.back(), grid.size()};
    const double mu = resolve_mu(cfg, trials, manifest);
    const double mt = mu_tilde(cfg.system.p_b, cfg.system.eta, cfg.system.alpha);
    manifest["mu_tilde"] = mt;
    for (double lb : grid) {
        const double p_noise = cellular_min_power(lb, mu, cfg.system.sigma2, cfg.system.alpha,
                                                  NoiseRegime::nonzero);
        const double p_intlim =
            cellular_min_power(lb, mt, cfg.system.sigma2, cfg.system.alpha,
                               NoiseRegime::interference_limited);
        csv.row({fmt(lb), fmt(p_noise), fmt(p_intlim)});
    }
}

void run_fig5(const ExperimentConfig& cfg, std::uint64_t trials, CsvWriter& csv, json& manifest) {
    std::vector<double> grid = cfg.lambda_p_grid;
    if (grid.empty()) grid = logspace(0.05, 2.0, 13);
    manifest["lambda_p_grid"] = {grid.front(), grid.back(), grid.size()};
    manifest["p_t_policy"] = "p_t = p (small-storage power instantiated at the delta-quantile)";
    const SystemParams& s = cfg.system;
    std::uint64_t row = 0;
    for (double lp : grid) {
        DeploymentParams d = cfg.deployment;
        d.lambda_p = lp;
        const double p_iso_large = mean_power_isotropic(d.q, lp, s.nu, s.beta) / s.omega;
        const double p_dir_large =
            mean_power_directed(d.q, lp, s.nu, s.beta, s.z_m, s.z_s) / s.omega;
        const Estimate iso_small = estimate_raw_power_quantile(
            s, d, s.delta, MptMode::isotropic, trials, cfg.seed + row, {cfg.truncation_factor});
        const Estimate dir_small = estimate_raw_power_quantile(
            s, d, s.delta, MptMode::directed, trials, cfg.seed + row, {cfg.truncation_factor});
        csv.row({fmt(lp), fmt(p_iso_large), fmt(p_dir_large), fmt(iso_small.value),
                 fmt(dir_small.value)});
        ++row;
    }
}

void run_power_outage(const ExperimentConfig& cfg, std::uint64_t trials, CsvWriter& csv,
                      json& manifest) {
    std::vector<double> grid = cfg.lambda_p_grid;
    if (grid.empty()) grid = logspace(0.1, 1.0, 5);
    manifest["lambda_p_grid"] = grid;
    const SystemParams& s = cfg.system;
    const MptMode mode = cfg.mpt == MptKind::directed ? MptMode::directed : MptMode::isotropic;
    std::uint64_t row = 0;
    for (double lp : grid) {
        DeploymentParams d = cfg.deployment;
        d.lambda_p = lp;
        const Estimate e = estimate_power_outage(s, d, s.p_t, mode, trials, cfg.seed + row,
                                                 {cfg.truncation_factor});
        double bound = std::numeric_limits<double>::quiet_NaN();
        try {
            bound = power_outage_bound(s.p_t, d.q, lp, s.beta, s.nu, mode, s.z_m);
        } catch (const BoundInapplicable&) {
        }
        csv.row({fmt(lp), fmt(d.q), fmt(s.p_t), mpt_name(cfg.mpt), fmt(e.value), fmt(e.stderr_),
                 fmt(bound)});
        ++row;
    }
}

void run_feasibility(const ExperimentConfig& cfg, std::uint64_t trials, CsvWriter& csv,
                     json& manifest) {
    std::vector<double> grid = cfg.lambda_b_grid;
    if (grid.empty()) grid = logspace(0.1, 2.0, 9);
    manifest["lambda_b_grid"] = grid;
    RegionConfig rc;
    rc.noise = cfg.noise;
    rc.storage = cfg.storage;
    rc.mpt = cfg.mpt;
    rc.network = cfg.mpt == MptKind::none ? NetworkKind::cellular : NetworkKind::hybrid;
    const double mu = rc.noise == NoiseRegime::interference_limited
                          ? mu_tilde(cfg.system.p_b, cfg.system.eta, cfg.system.alpha)
                          : resolve_mu(cfg, std::max<std::uint64_t>(trials, 100000), manifest);
    manifest["region"] = {{"mode", mpt_name(rc.mpt)},
                          {"storage", storage_name(rc.storage)},
                          {"noise", rc.noise == NoiseRegime::nonzero ? "nonzero"
                                                                     : "interference_limited"}};
    const BoundaryCurve curve = trace_boundary(rc, cfg.system, mu, grid, cfg.deployment.q);
    for (std::size_t i = 0; i < grid.size(); ++i)
        csv.row({fmt(grid[i]), fmt(curve.min_co_param[i]),
                 curve.infeasible_mask[i] ? "1" : "0"});
}

// Empirical minimum PB density: bisection on the simulated pipeline
// (available mobile power vs the outage-feasible minimum).
std::optional<double> simulated_min_lambda_p(const SystemParams& s, double lambda_b, double q,
                                             MptMode mode, StorageKind storage, double p_min,
                                             std::uint64_t trials, std::uint64_t seed,
                                             double truncation_factor, double hint) {
    const auto available_power = [&](double lp, std::uint64_t run) {
        DeploymentParams d;
        d.lambda_b = lambda_b;
        d.q = q;
        d.lambda_p = lp;
        if (storage == StorageKind::large) {
            return estimate_mean_raw_power(s, d, mode, trials, seed + run, {truncation_factor})
                       .value
                   / s.omega;
        }
        return estimate_raw_power_quantile(s, d, s.delta, mode, trials, seed + run,
                                           {truncation_factor})
            .value;
    };

    double hi = std::isfinite(hint) && hint > 0 ? hint : 0.1;
    std::uint64_t run = 0;
    const double lp_cap = 50.0;
    while (available_power(hi, run++) < p_min) {
        hi *= 2.0;
        if (hi > lp_cap) return std::nullopt;
    }
    double lo = hi / 2.0;
    while (lo > 1e-6 && available_power(lo, run++) >= p_min) {
        hi = lo;
        lo /= 2.0;
    }
    for (int iter = 0; iter < 12; ++iter) {
        const double mid = std::sqrt(lo * hi);
        if (available_power(mid, run++) >= p_min)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

void run_fig6(const ExperimentConfig& cfg, std::uint64_t trials, CsvWriter& csv, json& manifest) {
    std::vector<double> grid = cfg.lambda_b_grid;
    if (grid.empty()) grid = logspace(0.15, 2.0, 7);
    manifest["lambda_b_grid"] = grid;
    manifest["p_t_policy"] = "p_t = p (small-storage power instantiated at the delta-quantile)";
    const double mu = resolve_mu(cfg, 100000, manifest);
    const SystemParams& s = cfg.system;
    const double q = cfg.deployment.q;

    std::uint64_t run = 0;
    for (MptKind mpt : {MptKind::isotropic, MptKind::directed}) {
        for (StorageKind storage : {StorageKind::large, StorageKind::small}) {
            RegionConfig rc;
            rc.network = NetworkKind::hybrid;
            rc.mpt = mpt;
            rc.storage = storage;
            const MptMode mode =
                mpt == MptKind::directed ? MptMode::directed : MptMode::isotropic;
            for (double lb : grid) {
                const auto bound = hybrid_min_pb_density(lb, q, s, mu, rc);
                const double p_min =
                    cellular_min_power(lb, mu, s.sigma2, s.alpha, NoiseRegime::nonzero);
                const auto sim = simulated_min_lambda_p(
                    s, lb, q, mode, storage, p_min, trials, cfg.seed + 5000 + 100 * run,
                    cfg.truncation_factor, bound.value_or(0.1));
                csv.row({fmt(lb),
                         sim ? fmt(*sim) : "inf",
                         bound ? fmt(*bound) : "inf",
                         mpt_name(mpt), storage_name(storage)});
                ++run;
            }
        }
    }
}

json system_to_json(const SystemParams& s) {
    return json{{"alpha", s.alpha},   {"beta", s.beta},     {"nu", s.nu},
                {"theta", s.theta},   {"omega", s.omega},   {"K", s.K},
                {"epsilon", s.epsilon}, {"eta", s.eta},     {"delta", s.delta},
                {"sigma2", s.sigma2}, {"z_m", s.z_m},       {"z_s", s.z_s},
                {"p_b", s.p_b},       {"p_t", s.p_t}};
}

} // namespace

RunResult run(const ExperimentConfig& config) {
    config.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t trials =
        config.trials > 0 ? config.trials : default_trials(config.experiment);

    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    if (ec) throw OutputError("cannot create output directory " + config.out_dir);

    const std::string name = experiment_name(config.experiment);
    const fs::path csv_path = fs::path(config.out_dir) / (name + ".csv");

    json manifest;
    manifest["experiment"] = name;
    manifest["seed"] = config.seed;
    manifest["trials"] = trials;
    manifest["truncation_factor"] = config.truncation_factor;
    manifest["version"] = kVersion;
    manifest["schema"] = csv_schema(config.experiment);
    manifest["system"] = system_to_json(config.system);
    manifest["deployment"] = {{"p", config.deployment.p},
                              {"q", config.deployment.q},
                              {"lambda_b", config.deployment.lambda_b},
                              {"lambda_p", config.deployment.lambda_p}};

    CsvWriter csv(csv_path, csv_schema(config.experiment));
    switch (config.experiment) {
        case Experiment::outage: run_outage(config, trials, csv, manifest); break;
        case Experiment::mu_curve:
        case Experiment::fig3: run_mu_curve(config, trials, csv, manifest); break;
        case Experiment::fig4: run_fig4(config, trials, csv, manifest); break;
        case Experiment::mpt_power:
        case Experiment::fig5: run_fig5(config, trials, csv, manifest); break;
        case Experiment::power_outage: run_power_outage(config, trials, csv, manifest); break;
        case Experiment::feasibility: run_feasibility(config, trials, csv, manifest); break;
        case Experiment::fig6: run_fig6(config, trials, csv, manifest); break;
    }
    csv.close();

    const auto t1 = std::chrono::steady_clock::now();
    manifest["wall_time_s"] = std::chrono::duration<double>(t1 - t0).count();
    manifest["csv"] = csv_path.string();

    RunResult result;
    result.csv_path = csv_path.string();
    result.manifest_path = (fs::path(config.out_dir) / (name + ".manifest.json")).string();
    {
        std::ofstream mf(result.manifest_path);
        if (!mf) throw OutputError("cannot write manifest " + result.manifest_path);
        mf << manifest.dump(2) << "\n";
    }
    if (config.emit_plot) result.plot_path = emit_plot_script(result.csv_path, config.experiment);
    return result;
}

std::string emit_plot_script(const std::string& csv_path, Experiment experiment) {
    {
        std::ifstream in(csv_path);
        if (!in) throw OutputError("CSV not found: " + csv_path);
        std::string header;
        std::getline(in, header);
        if (header != csv_schema(experiment))
            throw ConfigError("CSV header does not match the " +
                              std::string(experiment_name(experiment)) + " schema");
    }
    const std::string out_path = csv_path + ".gp";
    std::ofstream gp(out_path);
    if (!gp) throw OutputError("cannot write plot script " + out_path);
    gp << "# gnuplot script generated by hybridnet " << kVersion << "\n";
    gp << "set datafile separator ','\n";
    gp << "set key autotitle columnhead\n";
    gp << "set grid\n";
    switch (experiment) {
        case Experiment::mu_curve:
        case Experiment::fig3:
            gp << "set xlabel 'mu'\nset ylabel 'epsilon'\n";
            gp << "plot '" << csv_path << "' using 1:2 with lines\n";
            break;
        case Experiment::fig4:
            gp << "set logscale xy\nset xlabel 'lambda_b'\nset ylabel 'min p'\n";
            gp << "plot '" << csv_path << "' using 1:2 with lines, '' using 1:3 with lines\n";
            break;
        case Experiment::mpt_power:
        case Experiment::fig5:
            gp << "set logscale x\nset xlabel 'lambda_p'\nset ylabel 'p'\n";
            gp << "plot for [c=2:5] '" << csv_path << "' using 1:c with lines\n";
            break;
        case Experiment::fig6:
            gp << "set logscale xy\nset xlabel 'lambda_b'\nset ylabel 'min lambda_p'\n";
            gp << "plot '" << csv_path << "' using 1:2 with points, '' using 1:3 with lines\n";
            break;
        case Experiment::outage:
            gp << "set logscale x\nset xlabel 'lambda_b'\nset ylabel 'P_out'\n";
            gp << "plot '" << csv_path << "' using 1:5 with linespoints\n";
            break;
        case Experiment::power_outage:
            gp << "set logscale x\nset xlabel 'lambda_p'\nset ylabel 'Pr(P < p_t)'\n";
            gp << "plot '" << csv_path << "' using 1:5 with linespoints, '' using 1:7 with lines\n";
            break;
        case Experiment::feasibility:
            gp << "set logscale xy\nset xlabel 'lambda_b'\nset ylabel 'min co-param'\n";
            gp << "plot '" << csv_path << "' using 1:2 with lines\n";
            break;
    }
    gp.close();
    if (gp.fail()) throw OutputError("failed writing " + out_path);
    return out_path;
}

} // namespace hybridnet
