#include "hybridnet/feasibility.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hybridnet/analytic.hpp"

namespace hybridnet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// sigma^2/mu for the nonzero-noise regime, 1/mu_tilde when interference
// limited.
double noise_over_mu(const SystemParams& system, double mu_threshold,
                     const RegionConfig& config) {
    if (!(mu_threshold > 0.0)) throw std::invalid_argument("mu threshold must be > 0");
    if (config.noise == NoiseRegime::interference_limited) return 1.0 / mu_threshold;
    return system.sigma2 / mu_threshold;
}

double region_kappa(const SystemParams& system, double rhs) {
    return system.omega * rhs * std::pow(system.nu, system.beta);
}

} // namespace

void RegionConfig::validate() const {
    if (network == NetworkKind::cellular && mpt != MptKind::none)
        throw std::invalid_argument("cellular region has no MPT mode");
    if (network == NetworkKind::hybrid && mpt == MptKind::none)
        throw std::invalid_argument("hybrid region needs an MPT mode");
}

double cellular_min_power(double lambda_b, double mu_threshold, double sigma2, double alpha,
                          NoiseRegime noise) {
    if (!(mu_threshold > 0.0)) throw std::invalid_argument("mu threshold must be > 0");
    if (!(lambda_b >= 0.0)) throw std::invalid_argument("lambda_b must be >= 0");
    if (lambda_b == 0.0) return kInf;
    const double rhs =
        noise == NoiseRegime::interference_limited ? 1.0 / mu_threshold : sigma2 / mu_threshold;
    return rhs / std::pow(lambda_b, 0.5 * alpha);
}

std::optional<double> hybrid_min_pb_density(double lambda_b, double q,
                                            const SystemParams& system, double mu_threshold,
                                            const RegionConfig& config) {
    config.validate();
    if (config.network != NetworkKind::hybrid)
        throw std::invalid_argument("hybrid_min_pb_density needs a hybrid config");
    if (!(lambda_b > 0.0 && q > 0.0))
        throw std::invalid_argument("lambda_b and q must be > 0");

    const double rhs = noise_over_mu(system, mu_threshold, config);
    const double alpha = system.alpha;
    const double beta = system.beta;
    const double nu = system.nu;
    const double lb_a2 = std::pow(lambda_b, 0.5 * alpha);

    if (config.storage == StorageKind::large) {
        if (config.mpt == MptKind::isotropic) {
            return (1.0 - 2.0 / beta) * rhs * system.omega * std::pow(nu, beta - 2.0)
                   / (M_PI * q * lb_a2);
        }
        // directed / large
        const double kap = region_kappa(system, rhs);
        const double x = system.z_m * q * lb_a2;
        if (!(x > kap)) return std::nullopt;
        return std::log(x / (x - kap)) / (M_PI * nu * nu);
    }

    // Small storage: the nearest-beacon bound must be able to supply the
    // minimum outage-feasible power at all.
    const double q_eff = config.mpt == MptKind::directed ? system.z_m * q : q;
    const double existence_rhs = std::pow(rhs * std::pow(nu, beta), 2.0 / alpha);
    if (!(std::pow(q_eff, 2.0 / alpha) * lambda_b >= existence_rhs)) return std::nullopt;
    return (std::log(1.0 / system.delta) / M_PI) * std::pow(rhs, 2.0 / beta)
           * std::pow(q_eff, -2.0 / beta) * std::pow(lambda_b, -alpha / beta);
}

bool region_contains(const DeploymentParams& point, const SystemParams& system,
                     double mu_threshold, const RegionConfig& config) {
    config.validate();
    point.validate();
    const double rhs = noise_over_mu(system, mu_threshold, config);
    const double alpha = system.alpha;

    if (config.network == NetworkKind::cellular) {
        if (point.lambda_b == 0.0) return false;
        return point.p * std::pow(point.lambda_b, 0.5 * alpha) >= rhs;
    }
    if (point.lambda_b == 0.0 || point.q == 0.0) return false;
    const auto min_lp =
        hybrid_min_pb_density(point.lambda_b, point.q, system, mu_threshold, config);
    if (!min_lp) return false;
    return point.lambda_p >= *min_lp;
}

BoundaryCurve trace_boundary(const RegionConfig& config, const SystemParams& system,
                             double mu_threshold, std::span<const double> lambda_b_grid,
                             double q) {
    config.validate();
    for (std::size_t i = 0; i < lambda_b_grid.size(); ++i) {
        if (!(lambda_b_grid[i] > 0.0))
            throw std::invalid_argument("lambda_b grid must be positive");
        if (i > 0 && !(lambda_b_grid[i] > lambda_b_grid[i - 1]))
            throw std::invalid_argument("lambda_b grid must be sorted ascending");
    }
    BoundaryCurve curve;
    curve.config = config;
    curve.q = q;
    curve.lambda_b_grid.assign(lambda_b_grid.begin(), lambda_b_grid.end());
    for (double lb : lambda_b_grid) {
        if (config.network == NetworkKind::cellular) {
            curve.min_co_param.push_back(
                cellular_min_power(lb, mu_threshold, system.sigma2, system.alpha, config.noise));
            curve.infeasible_mask.push_back(0);
        } else {
            const auto lp = hybrid_min_pb_density(lb, q, system, mu_threshold, config);
            curve.min_co_param.push_back(lp.value_or(kInf));
            curve.infeasible_mask.push_back(lp ? 0 : 1);
        }
    }
    return curve;
}

VerifyReport verify_boundary_by_simulation(const BoundaryCurve& curve,
                                           const SystemParams& system, std::uint64_t trials,
                                           std::uint64_t seed, VerifyOptions opts) {
    VerifyReport report;
    const std::uint64_t power_trials = std::max<std::uint64_t>(2000, trials / 4);

    // Sample finite grid points: endpoints first, then the middle.
    std::vector<std::size_t> finite;
    for (std::size_t i = 0; i < curve.lambda_b_grid.size(); ++i)
        if (!curve.infeasible_mask[i]) finite.push_back(i);
    std::vector<std::size_t> picked;
    if (!finite.empty()) {
        picked.push_back(finite.front());
        if (finite.size() > 1 && opts.max_grid_points > 1) picked.push_back(finite.back());
        if (finite.size() > 2 && opts.max_grid_points > 2)
            picked.push_back(finite[finite.size() / 2]);
    }

    std::uint64_t run = 0;
    for (std::size_t idx : picked) {
        const double lambda_b = curve.lambda_b_grid[idx];
        const double boundary = curve.min_co_param[idx];
        for (double factor : opts.factors) {
            VerifyPoint pt;
            pt.lambda_b = lambda_b;
            pt.factor = factor;
            pt.co_param = boundary * factor;
            pt.expected_feasible = factor >= 1.0;

            DeploymentParams d;
            d.lambda_b = lambda_b;
            d.q = curve.q;

            if (curve.config.network == NetworkKind::cellular) {
                pt.p_used = pt.co_param;
            } else {
                d.lambda_p = pt.co_param;
                const MptMode mode = curve.config.mpt == MptKind::directed
                                         ? MptMode::directed
                                         : MptMode::isotropic;
                if (curve.config.storage == StorageKind::large) {
                    const Estimate mean = estimate_mean_raw_power(system, d, mode, power_trials,
                                                                  seed + 1000 + run);
                    pt.p_used = mean.value / system.omega;
                } else {
                    const Estimate quant = estimate_raw_power_quantile(
                        system, d, system.delta, mode, power_trials, seed + 1000 + run);
                    pt.p_used = quant.value;
                }
            }

            d.p = pt.p_used;
            const Estimate outage = estimate_outage(system, d, trials, seed + 2000 + run);
            pt.p_out = outage.value;
            pt.p_out_stderr = outage.stderr_;
            pt.observed_feasible = outage.value <= system.epsilon + 3.0 * outage.stderr_;
            pt.pass = pt.observed_feasible == pt.expected_feasible;
            report.all_pass = report.all_pass && pt.pass;
            report.points.push_back(pt);
            ++run;
        }
    }
    return report;
}

} // namespace hybridnet
